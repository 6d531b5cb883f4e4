//! Monte Carlo estimators for convergence in probability and in mean, and
//! the experiment drivers built on them.
//!
//! Every trial `k` draws from the sub-seed `derive_seed(master_seed, k)` and
//! results are folded in trial order, so a report depends only on its
//! configuration and never on the [`Executor`] that ran it.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::{FRAC_2_PI, PI};

use crate::error::{argument, Error, Result};
use crate::hermite::{gauss_hermite_rule, HermiteBasis, WeightConvention, MAX_GAUSS_HERMITE_ORDER};
use crate::integral::{
    mean_abs_bound, real_line_tail_bound, finite_tail_bound, window_range, TestFunction, DEFAULT_HALF_WIDTH,
    DEFAULT_STEP,
};
use crate::rfh::{coefficients, integrate_weights, random_coeffs, EigenMode, RfhExpansion, SeriesScaling, RULE_MARGIN};
use crate::rng::derive_seed;
use crate::stable::{check_alpha, simulate_path, uniform_grid};
use crate::stats::{mean_with_halfwidth, wilson_interval, Z99};

/// Runs independent trials. Implementations must return results in trial
/// order.
pub trait Executor: Sync {
    fn map_trials<T, F>(&self, trials: usize, master_seed: u64, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize, u64) -> T + Sync + Send;
}

/// Runs every trial on the calling thread.
#[derive(Debug, Clone, Copy, Default)]
pub struct Sequential;

impl Executor for Sequential {
    fn map_trials<T, F>(&self, trials: usize, master_seed: u64, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize, u64) -> T + Sync + Send,
    {
        (0..trials).map(|k| f(k, derive_seed(master_seed, k as u64))).collect()
    }
}

/// Smallest trial count accepted by the estimators.
pub const MIN_TRIALS: usize = 100;

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ProbEstimate {
    pub prob: f64,
    /// Half the width of the 99% Wilson interval.
    pub ci_halfwidth: f64,
    pub lower: f64,
    pub upper: f64,
    pub trials: usize,
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct MeanEstimate {
    pub mean: f64,
    /// 99% normal-approximation half-width.
    pub ci_halfwidth: f64,
    pub trials: usize,
}

/// Fraction of gaps `> epsilon` with its Wilson interval.
pub fn prob_from_gaps(gaps: &[f64], epsilon: f64) -> ProbEstimate {
    let hits = gaps.iter().filter(|g| **g > epsilon).count();
    let (lower, upper) = wilson_interval(hits, gaps.len(), Z99);
    ProbEstimate {
        prob: if gaps.is_empty() { 0.0 } else { hits as f64 / gaps.len() as f64 },
        ci_halfwidth: 0.5 * (upper - lower),
        lower,
        upper,
        trials: gaps.len(),
    }
}

pub fn mean_from_gaps(gaps: &[f64]) -> MeanEstimate {
    let (mean, ci_halfwidth) = mean_with_halfwidth(gaps, Z99);
    MeanEstimate {
        mean,
        ci_halfwidth,
        trials: gaps.len(),
    }
}

fn check_trials(trials: usize) -> Result<()> {
    if trials < MIN_TRIALS {
        return Err(argument(format!("at least {MIN_TRIALS} trials are required, got {trials}")));
    }
    Ok(())
}

/// Runs `trial` for every sub-seed and returns the results in order, or the
/// first failure (in trial order) tagged with its sub-seed.
pub fn run_trials<E, T, F>(exec: &E, trials: usize, master_seed: u64, trial: F) -> Result<Vec<T>>
where
    E: Executor,
    T: Send,
    F: Fn(u64) -> Result<T> + Sync + Send,
{
    exec.map_trials(trials, master_seed, |_, seed| trial(seed).map_err(|e| (seed, e)))
        .into_iter()
        .map(|r| {
            r.map_err(|(seed, e)| Error::Trial {
                seed,
                source: Box::new(e),
            })
        })
        .collect()
}

fn gaps<E, F>(exec: &E, pair_sampler: F, trials: usize, master_seed: u64) -> Result<Vec<f64>>
where
    E: Executor,
    F: Fn(u64) -> Result<(f64, f64)> + Sync + Send,
{
    check_trials(trials)?;
    run_trials(exec, trials, master_seed, |seed| pair_sampler(seed).map(|(a, b)| (a - b).abs()))
}

/// Estimates `P(|a − b| > ε)` over pairs drawn from `pair_sampler`.
pub fn estimate_prob_exceed<E, F>(exec: &E, pair_sampler: F, epsilon: f64, trials: usize, master_seed: u64) -> Result<ProbEstimate>
where
    E: Executor,
    F: Fn(u64) -> Result<(f64, f64)> + Sync + Send,
{
    if !(epsilon > 0.0) {
        return Err(argument(format!("ε must be positive, got {epsilon}")));
    }
    Ok(prob_from_gaps(&gaps(exec, pair_sampler, trials, master_seed)?, epsilon))
}

/// Estimates `E|a − b|` over pairs drawn from `pair_sampler`.
pub fn estimate_mean_error<E, F>(exec: &E, pair_sampler: F, trials: usize, master_seed: u64) -> Result<MeanEstimate>
where
    E: Executor,
    F: Fn(u64) -> Result<(f64, f64)> + Sync + Send,
{
    Ok(mean_from_gaps(&gaps(exec, pair_sampler, trials, master_seed)?))
}

/// Everything an experiment needs; echoed verbatim into every report.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ExperimentConfig {
    pub trials: usize,
    pub epsilon: f64,
    /// `ε′` used in the bounds; `None` means `ε′ = ε`.
    pub eps_prime: Option<f64>,
    pub c: f64,
    pub orders: Vec<usize>,
    pub y_grid: Vec<f64>,
    pub half_width: f64,
    pub step: f64,
    pub alpha: f64,
    pub master_seed: u64,
    pub reference_order: usize,
    pub scaling: SeriesScaling,
    pub convention: WeightConvention,
}

/// Default master seed for runs that do not pass one.
pub const DEFAULT_SEED: u64 = 42;

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            trials: 2000,
            epsilon: 0.1,
            eps_prime: None,
            c: 1.0,
            orders: vec![0, 2, 4, 8, 16, 32],
            y_grid: vec![-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0],
            half_width: DEFAULT_HALF_WIDTH,
            step: DEFAULT_STEP,
            alpha: 2.0,
            master_seed: DEFAULT_SEED,
            reference_order: 128,
            scaling: SeriesScaling::Orthonormal,
            convention: WeightConvention::PaperLiteral,
        }
    }
}

impl ExperimentConfig {
    pub fn eps_prime_for(&self, epsilon: f64) -> f64 {
        self.eps_prime.unwrap_or(epsilon)
    }

    pub fn validate(&self) -> Result<()> {
        check_trials(self.trials)?;
        check_alpha(self.alpha)?;
        if !(self.epsilon > 0.0) {
            return Err(argument(format!("ε must be positive, got {}", self.epsilon)));
        }
        if let Some(e) = self.eps_prime {
            if !(e > 0.0) {
                return Err(argument(format!("ε′ must be positive, got {e}")));
            }
        }
        if !(self.c > 0.0) {
            return Err(argument(format!("C must be positive, got {}", self.c)));
        }
        if self.orders.windows(2).any(|w| w[1] <= w[0]) {
            return Err(argument("orders must be strictly increasing"));
        }
        if let Some(&top) = self.orders.last() {
            if top >= self.reference_order {
                return Err(argument(format!(
                    "reference order {} must exceed every partial-sum order (max {top})",
                    self.reference_order
                )));
            }
        }
        if self.reference_order + RULE_MARGIN > MAX_GAUSS_HERMITE_ORDER {
            return Err(argument(format!(
                "reference order {} needs more than {MAX_GAUSS_HERMITE_ORDER} quadrature nodes",
                self.reference_order
            )));
        }
        if self.y_grid.iter().any(|y| !y.is_finite()) {
            return Err(argument("y grid must be finite"));
        }
        uniform_grid(self.half_width, self.step)?;
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ConvergenceRow {
    pub n: usize,
    pub y: f64,
    pub est_prob_exceed: f64,
    pub prob_ci_halfwidth: f64,
    pub est_mean_abs_err: f64,
    pub mean_ci_halfwidth: f64,
}

/// The reference order compared against itself.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SelfCheck {
    pub est_prob_exceed: f64,
    pub max_abs_gap: f64,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ConvergenceReport {
    pub function: String,
    pub eigen_mode: EigenMode,
    pub config: ExperimentConfig,
    pub rows: Vec<ConvergenceRow>,
    pub self_check: SelfCheck,
}

impl ConvergenceReport {
    pub fn row(&self, n: usize, y: f64) -> Option<&ConvergenceRow> {
        self.rows.iter().find(|r| r.n == n && r.y == y)
    }
}

/// Compares the partial sums `S_n(y, ω)` with the order-`reference_order`
/// stochastic integral `∫ f_ref(y, t) g(t) dX(t, ω)` on the same path, for
/// every `(n, y)` in `cfg.orders × cfg.y_grid`.
pub fn series_convergence_experiment<E: Executor>(
    exec: &E,
    f: &TestFunction,
    cfg: &ExperimentConfig,
    mode: EigenMode,
) -> Result<ConvergenceReport> {
    cfg.validate()?;
    if cfg.alpha != 2.0 {
        return Err(argument(format!("series convergence is stated for α = 2, got {}", cfg.alpha)));
    }
    let reference = cfg.reference_order;
    let basis = Arc::new(HermiteBasis::new(reference, cfg.convention));
    let rule = gauss_hermite_rule((reference + RULE_MARGIN).clamp(64, MAX_GAUSS_HERMITE_ORDER))?;
    let coeffs = coefficients(f, reference, &basis, &rule)?;
    let grid: Arc<[f64]> = uniform_grid(cfg.half_width, cfg.step)?.into();
    let template = RfhExpansion::new(
        Arc::clone(&basis),
        coeffs.clone(),
        vec![0.0; reference + 1],
        mode,
        cfg.scaling,
        0,
    )?;
    let targets = cfg
        .y_grid
        .iter()
        .map(|&y| template.target_weights(y, reference, &grid))
        .collect::<Result<Vec<_>>>()?;

    let ny = cfg.y_grid.len();
    let no = cfg.orders.len();
    let per_trial = run_trials(exec, cfg.trials, cfg.master_seed, |seed| {
        let path = simulate_path(Arc::clone(&grid), cfg.alpha, seed)?;
        let a = random_coeffs(&basis, reference, &path)?;
        let e = RfhExpansion::new(Arc::clone(&basis), coeffs.clone(), a, mode, cfg.scaling, seed)?;
        // layout: [y][order] then [y] for the self-check
        let mut out = vec![0.0; ny * no + ny];
        for (iy, &y) in cfg.y_grid.iter().enumerate() {
            let sums = e.partial_sums(y)?;
            let target = integrate_weights(&targets[iy], &path);
            for (io, &n) in cfg.orders.iter().enumerate() {
                out[iy * no + io] = (sums[n] - target).norm();
            }
            out[ny * no + iy] = (sums[reference] - target).norm();
        }
        Ok(out)
    })?;

    let mut rows = Vec::with_capacity(ny * no);
    let mut column = vec![0.0; cfg.trials];
    for &n in &cfg.orders {
        for (iy, &y) in cfg.y_grid.iter().enumerate() {
            let io = cfg.orders.iter().position(|&o| o == n).expect("order present");
            for (k, trial) in per_trial.iter().enumerate() {
                column[k] = trial[iy * no + io];
            }
            let p = prob_from_gaps(&column, cfg.epsilon);
            let m = mean_from_gaps(&column);
            rows.push(ConvergenceRow {
                n,
                y,
                est_prob_exceed: p.prob,
                prob_ci_halfwidth: p.ci_halfwidth,
                est_mean_abs_err: m.mean,
                mean_ci_halfwidth: m.ci_halfwidth,
            });
        }
    }
    let self_gaps: Vec<f64> = per_trial.iter().flat_map(|t| t[ny * no..].iter().copied()).collect();
    let self_check = SelfCheck {
        est_prob_exceed: prob_from_gaps(&self_gaps, cfg.epsilon).prob,
        max_abs_gap: self_gaps.iter().copied().fold(0.0, f64::max),
    };
    Ok(ConvergenceReport {
        function: f.name().to_string(),
        eigen_mode: mode,
        config: cfg.clone(),
        rows,
        self_check,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CauchyRow {
    pub t: f64,
    pub t_prime: f64,
    pub mean_abs_diff: f64,
    pub ci_halfwidth: f64,
    /// Exact `E|Y_{T′} − Y_T|` when α = 2 (Gaussian difference).
    pub exact_mean_abs_diff: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CauchyReport {
    pub function: String,
    pub truncations: Vec<f64>,
    pub config: ExperimentConfig,
    pub rows: Vec<CauchyRow>,
}

/// `E|Y_{T_{i+1}} − Y_{T_i}|` for consecutive truncations, where every
/// `Y_T = ∫_{−T}^{T} f dX` is read off one path simulated on the widest
/// window, so the difference only involves increments with `|t| ≥ T_i`.
pub fn cauchy_truncation_experiment<E: Executor>(
    exec: &E,
    f: &TestFunction,
    truncations: &[f64],
    cfg: &ExperimentConfig,
) -> Result<CauchyReport> {
    check_trials(cfg.trials)?;
    check_alpha(cfg.alpha)?;
    if truncations.len() < 2 {
        return Err(argument("need at least two truncations"));
    }
    if truncations.iter().any(|t| !(*t > 0.0)) || truncations.windows(2).any(|w| w[1] < w[0]) {
        return Err(argument("truncations must be positive and non-decreasing"));
    }
    let widest = *truncations.last().expect("non-empty");
    let grid: Arc<[f64]> = uniform_grid(widest, cfg.step)?.into();
    let values: Vec<f64> = grid[..grid.len() - 1].iter().map(|&t| f.eval(t)).collect();
    if let Some(i) = values.iter().position(|v| !v.is_finite()) {
        return Err(Error::Evaluation {
            at: grid[i],
            value: values[i],
        });
    }
    let windows: Vec<(usize, usize)> = truncations.iter().map(|&t| window_range(&grid, -t, t)).collect();
    let pairs = truncations.len() - 1;
    let per_trial = run_trials(exec, cfg.trials, cfg.master_seed, |seed| {
        let path = simulate_path(Arc::clone(&grid), cfg.alpha, seed)?;
        let d = path.increments();
        let y: Vec<f64> = windows
            .iter()
            .map(|&(s, e)| (s..e).map(|i| values[i] * d[i]).sum::<f64>())
            .collect();
        Ok((0..pairs).map(|i| (y[i + 1] - y[i]).abs()).collect::<Vec<f64>>())
    })?;
    let mut rows = Vec::with_capacity(pairs);
    for i in 0..pairs {
        let column: Vec<f64> = per_trial.iter().map(|t| t[i]).collect();
        let m = mean_from_gaps(&column);
        let (t, t_prime) = (truncations[i], truncations[i + 1]);
        let exact = if cfg.alpha == 2.0 {
            let energy = if t == t_prime {
                0.0
            } else {
                f.power_integral_on(2.0, t, t_prime)? + f.power_integral_on(2.0, -t_prime, -t)?
            };
            // Y_{T′} − Y_T ~ N(0, 2 ∫ f²) over the annulus; E|N(0, σ²)| = σ √(2/π)
            Some(libm::sqrt(2.0 * energy * FRAC_2_PI))
        } else {
            None
        };
        rows.push(CauchyRow {
            t,
            t_prime,
            mean_abs_diff: m.mean,
            ci_halfwidth: m.ci_halfwidth,
            exact_mean_abs_diff: exact,
        });
    }
    Ok(CauchyReport {
        function: f.name().to_string(),
        truncations: truncations.to_vec(),
        config: cfg.clone(),
        rows,
    })
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct BoundCheckRow {
    /// `mean_abs`, `real_line_tail` or `finite_tail`.
    pub quantity: String,
    pub epsilon: Option<f64>,
    pub eps_prime: Option<f64>,
    pub empirical: f64,
    pub ci_halfwidth: f64,
    /// Upper end of the confidence interval compared with the bound.
    pub upper: f64,
    pub bound: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct BoundReport {
    pub function: String,
    pub alpha: f64,
    pub config: ExperimentConfig,
    pub rows: Vec<BoundCheckRow>,
}

impl BoundReport {
    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }
}

/// Empirical `E|∫_{−T}^{T} f dX|` and `P(|∫ f dX| > ε)` against the moment
/// bound and the tail bound (real-line form at α = 2, finite-interval form
/// otherwise). Each threshold in `epsilons` (or `cfg.epsilon` when empty)
/// yields one tail row.
pub fn bound_check_experiment<E: Executor>(
    exec: &E,
    f: &TestFunction,
    alpha: f64,
    cfg: &ExperimentConfig,
    epsilons: &[f64],
) -> Result<BoundReport> {
    check_trials(cfg.trials)?;
    check_alpha(alpha)?;
    let thresholds: Vec<f64> = if epsilons.is_empty() { vec![cfg.epsilon] } else { epsilons.to_vec() };
    if thresholds.iter().any(|e| !(*e > 0.0)) {
        return Err(argument("every ε must be positive"));
    }
    let t = cfg.half_width;
    let grid: Arc<[f64]> = uniform_grid(t, cfg.step)?.into();
    let values: Vec<f64> = grid[..grid.len() - 1].iter().map(|&s| f.eval(s)).collect();
    let samples = run_trials(exec, cfg.trials, cfg.master_seed, |seed| {
        let path = simulate_path(Arc::clone(&grid), alpha, seed)?;
        Ok(values.iter().zip(path.increments()).map(|(v, d)| v * d).sum::<f64>().abs())
    })?;

    let mut rows = Vec::with_capacity(1 + thresholds.len());
    let m = mean_from_gaps(&samples);
    let bound = mean_abs_bound(f, alpha, -t, t)?;
    rows.push(BoundCheckRow {
        quantity: "mean_abs".to_string(),
        epsilon: None,
        eps_prime: None,
        empirical: m.mean,
        ci_halfwidth: m.ci_halfwidth,
        upper: m.mean + m.ci_halfwidth,
        bound,
        pass: m.mean + m.ci_halfwidth <= bound,
    });
    for &eps in &thresholds {
        let eps_prime = cfg.eps_prime_for(eps);
        let p = prob_from_gaps(&samples, eps);
        let (quantity, bound) = if alpha == 2.0 {
            ("real_line_tail", real_line_tail_bound(f, eps_prime, cfg.c)?)
        } else {
            ("finite_tail", finite_tail_bound(f, alpha, -t, t, eps_prime, cfg.c)?)
        };
        rows.push(BoundCheckRow {
            quantity: quantity.to_string(),
            epsilon: Some(eps),
            eps_prime: Some(eps_prime),
            empirical: p.prob,
            ci_halfwidth: p.ci_halfwidth,
            upper: p.upper,
            bound,
            pass: p.upper <= bound,
        });
    }
    Ok(BoundReport {
        function: f.name().to_string(),
        alpha,
        config: cfg.clone(),
        rows,
    })
}

/// `E|N(0, σ²)| = σ √(2/π)`.
pub fn gaussian_mean_abs(sigma: f64) -> f64 {
    sigma * libm::sqrt(2.0 / PI)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::rng_from_seed;
    use crate::stats::normal_cdf;
    use rand_distr::{Distribution, StandardNormal};

    fn normal(seed: u64) -> f64 {
        StandardNormal.sample(&mut rng_from_seed(seed))
    }

    #[test]
    fn estimators_on_degenerate_pairs() {
        let p = estimate_prob_exceed(&Sequential, |_| Ok((1.0, 1.0)), 0.1, 1000, 1).unwrap();
        assert_eq!(p.prob, 0.0);
        assert!(p.ci_halfwidth < 0.01);
        let p = estimate_prob_exceed(&Sequential, |s| Ok((normal(s), normal(s) + 0.2)), 0.1, 1000, 1).unwrap();
        assert_eq!(p.prob, 1.0);
        let m = estimate_mean_error(&Sequential, |_| Ok((3.0, 3.0)), 500, 1).unwrap();
        assert_eq!((m.mean, m.ci_halfwidth), (0.0, 0.0));
        let m = estimate_mean_error(&Sequential, |s| Ok((normal(s) + 0.25, normal(s))), 500, 1).unwrap();
        assert_eq!(m.mean, 0.25);
    }

    #[test]
    fn estimators_calibrate_against_normal_law() {
        let eps = 1.959_963_984_540_054;
        let p = estimate_prob_exceed(&Sequential, |s| Ok((normal(s), 0.0)), eps, 100_000, 9).unwrap();
        let want = 2.0 * (1.0 - normal_cdf(eps));
        assert!((p.prob - want).abs() <= p.ci_halfwidth, "{p:?}");
        let m = estimate_mean_error(&Sequential, |s| Ok((normal(s), 0.0)), 100_000, 9).unwrap();
        assert!((m.mean - libm::sqrt(2.0 / PI)).abs() <= m.ci_halfwidth, "{m:?}");
    }

    #[test]
    fn sampler_failure_reports_sub_seed() {
        let err = estimate_mean_error(
            &Sequential,
            |s| if s == derive_seed(5, 7) { Err(argument("boom")) } else { Ok((0.0, 0.0)) },
            200,
            5,
        )
        .unwrap_err();
        assert!(matches!(err, Error::Trial { seed, .. } if seed == derive_seed(5, 7)));
        assert!(estimate_mean_error(&Sequential, |_| Ok((0.0, 0.0)), 10, 5).is_err());
    }

    #[test]
    fn config_validation() {
        assert!(ExperimentConfig::default().validate().is_ok());
        let bad = ExperimentConfig {
            orders: vec![0, 4, 2],
            ..Default::default()
        };
        assert!(bad.validate().is_err());
        let bad = ExperimentConfig {
            reference_order: 32,
            ..Default::default()
        };
        assert!(bad.validate().is_err());
        let bad = ExperimentConfig {
            epsilon: 0.0,
            ..Default::default()
        };
        assert!(bad.validate().is_err());
    }

    fn small_cfg() -> ExperimentConfig {
        ExperimentConfig {
            trials: 200,
            step: 0.01,
            reference_order: 48,
            orders: vec![0, 1, 2, 3, 4, 8, 16],
            y_grid: vec![0.0, 0.5],
            ..Default::default()
        }
    }

    #[test]
    fn odd_function_rows_pair_up() {
        // c_k = 0 for even k, so S_{2k+1} = S_{2k+2}
        let r = series_convergence_experiment(&Sequential, &TestFunction::t_gaussian(), &small_cfg(), EigenMode::None).unwrap();
        for y in [0.0, 0.5] {
            let (a, b) = (r.row(1, y).unwrap(), r.row(2, y).unwrap());
            assert_eq!(a.est_prob_exceed, b.est_prob_exceed);
            assert!((a.est_mean_abs_err - b.est_mean_abs_err).abs() < 1e-12);
            let (a, b) = (r.row(3, y).unwrap(), r.row(4, y).unwrap());
            assert!((a.est_mean_abs_err - b.est_mean_abs_err).abs() < 1e-12);
        }
        assert_eq!(r.self_check.est_prob_exceed, 0.0);
        assert!(r.self_check.max_abs_gap < 1e-9);
    }

    #[test]
    fn series_experiment_requires_gaussian_case() {
        let cfg = ExperimentConfig {
            alpha: 1.5,
            ..small_cfg()
        };
        assert!(series_convergence_experiment(&Sequential, &TestFunction::gaussian(), &cfg, EigenMode::None).is_err());
    }

    #[test]
    fn cauchy_rows_for_compact_support_and_equal_truncations() {
        let cfg = ExperimentConfig {
            trials: 200,
            step: 0.01,
            ..Default::default()
        };
        let r = cauchy_truncation_experiment(&Sequential, &TestFunction::box01(), &[1.0, 2.0, 3.0], &cfg).unwrap();
        for row in &r.rows {
            assert_eq!(row.mean_abs_diff, 0.0);
        }
        let r = cauchy_truncation_experiment(&Sequential, &TestFunction::gaussian(), &[2.0, 2.0], &cfg).unwrap();
        assert_eq!(r.rows[0].mean_abs_diff, 0.0);
        assert_eq!(r.rows[0].exact_mean_abs_diff, Some(0.0));
    }

    #[test]
    fn bound_experiment_zero_function() {
        let cfg = ExperimentConfig {
            trials: 200,
            step: 0.01,
            ..Default::default()
        };
        let r = bound_check_experiment(&Sequential, &TestFunction::zero(), 2.0, &cfg, &[1.0]).unwrap();
        assert!(r.rows[0].pass);
        assert_eq!(r.rows[0].empirical, 0.0);
        assert_eq!(r.rows[1].empirical, 0.0);
        assert_eq!(r.rows[0].bound, 0.0);
        assert_eq!(r.rows[1].bound, 0.0);
    }
}
