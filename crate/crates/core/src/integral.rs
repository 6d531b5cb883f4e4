//! Stochastic integrals `∫ f(t) dX(t, ω)` of deterministic integrands
//! against a symmetric α-stable process.
//!
//! For deterministic `f` the integral is itself symmetric α-stable with
//! scale `(∫|f|^α dt)^{1/α}`, which gives an exact sampler to test the
//! Riemann-Stieltjes discretization against, and closed forms for the
//! moment and tail bounds below.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::f64::consts::PI;
use core::fmt;

/// Positive zero of `H_3`.
const SQRT_3_2: f64 = 1.224_744_871_391_589;

use rand::Rng;

use crate::error::{argument, Error, Result};
use crate::quad;
use crate::stable::{check_alpha, simulate_path, uniform_grid, SamplePath, StableLaw};

pub type RealFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// Closed form of `∫_ℝ |f|^α dt` as a function of α, where known.
pub type PowerIntegral = fn(f64) -> Option<f64>;

/// Default truncation half-width for Gaussian-decay integrands.
pub const DEFAULT_HALF_WIDTH: f64 = 6.0;
/// Default Riemann-Stieltjes step.
pub const DEFAULT_STEP: f64 = 1e-3;

/// A deterministic integrand with optional closed-form information.
#[derive(Clone)]
pub struct TestFunction {
    name: String,
    eval: RealFn,
    abs_power_integral: Option<PowerIntegral>,
    support_hint: f64,
    breakpoints: Vec<f64>,
}

impl fmt::Debug for TestFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TestFunction")
            .field("name", &self.name)
            .field("support_hint", &self.support_hint)
            .field("breakpoints", &self.breakpoints)
            .finish_non_exhaustive()
    }
}

impl TestFunction {
    pub fn new(name: impl Into<String>, eval: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Self {
        Self {
            name: name.into(),
            eval: Arc::new(eval),
            abs_power_integral: None,
            support_hint: DEFAULT_HALF_WIDTH,
            breakpoints: Vec::new(),
        }
    }

    pub fn with_abs_power_integral(mut self, closed_form: PowerIntegral) -> Self {
        self.abs_power_integral = Some(closed_form);
        self
    }

    pub fn with_support_hint(mut self, half_width: f64) -> Self {
        self.support_hint = half_width;
        self
    }

    /// Points where `f` jumps; quadrature splits there.
    pub fn with_breakpoints(mut self, points: &[f64]) -> Self {
        self.breakpoints = points.to_vec();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn support_hint(&self) -> f64 {
        self.support_hint
    }

    pub fn breakpoints(&self) -> &[f64] {
        &self.breakpoints
    }

    #[inline]
    pub fn eval(&self, t: f64) -> f64 {
        (self.eval)(t)
    }

    pub fn evaluator(&self) -> RealFn {
        Arc::clone(&self.eval)
    }

    /// `f ≡ 0`.
    pub fn zero() -> Self {
        Self::new("zero", |_| 0.0)
            .with_abs_power_integral(|_| Some(0.0))
            .with_support_hint(1.0)
    }

    /// `e^{−t²}`; `∫ e^{−αt²} dt = √(π/α)`.
    pub fn gaussian() -> Self {
        Self::new("gaussian", |t| libm::exp(-t * t)).with_abs_power_integral(|a| Some(libm::sqrt(PI / a)))
    }

    /// `t e^{−t²}`; `∫ |t|^α e^{−αt²} dt = Γ((α+1)/2) / α^{(α+1)/2}`.
    pub fn t_gaussian() -> Self {
        Self::new("t_gaussian", |t| t * libm::exp(-t * t)).with_abs_power_integral(|a| {
            let p = 0.5 * (a + 1.0);
            Some(libm::tgamma(p) / libm::pow(a, p))
        })
        .with_breakpoints(&[0.0])
    }

    /// `1 / (1 + t²)`; `∫ (1+t²)^{−α} dt = √π Γ(α − 1/2) / Γ(α)`.
    pub fn cauchy_kernel() -> Self {
        Self::new("cauchy_kernel", |t| 1.0 / (1.0 + t * t))
            .with_abs_power_integral(|a| Some(libm::sqrt(PI) * libm::tgamma(a - 0.5) / libm::tgamma(a)))
            .with_support_hint(1.0e3)
    }

    /// Indicator of `[0, 1)`.
    pub fn box01() -> Self {
        Self::new("box01", |t| if (0.0..1.0).contains(&t) { 1.0 } else { 0.0 })
            .with_abs_power_integral(|_| Some(1.0))
            .with_support_hint(1.0)
            .with_breakpoints(&[0.0, 1.0])
    }

    /// `H_3(t) e^{−t²/2}`; `∫ H_3² e^{−t²} dt = 48√π` at α = 2.
    pub fn hermite3_gaussian() -> Self {
        Self::new("hermite3_gaussian", |t| {
            (8.0 * t * t * t - 12.0 * t) * libm::exp(-0.5 * t * t)
        })
        .with_abs_power_integral(|a| (a == 2.0).then(|| 48.0 * libm::sqrt(PI)))
        .with_support_hint(10.0)
        .with_breakpoints(&[-SQRT_3_2, 0.0, SQRT_3_2])
    }

    /// The bare polynomial `H_n`. Not in L²(ℝ); used by the weighted
    /// projection checks only.
    pub fn hermite(n: usize) -> Self {
        Self::new(format!("hermite{n}"), move |t| crate::hermite::hermite_poly(n, t))
    }

    /// The built-in catalog (all members lie in L²(ℝ) and in L^α for
    /// α ∈ (1, 2]).
    pub fn catalog() -> Vec<TestFunction> {
        alloc::vec![
            Self::gaussian(),
            Self::t_gaussian(),
            Self::cauchy_kernel(),
            Self::box01(),
            Self::hermite3_gaussian(),
        ]
    }

    /// Catalog lookup; also accepts `zero` and `hermite<N>`.
    pub fn by_name(name: &str) -> Option<TestFunction> {
        if name == "zero" {
            return Some(Self::zero());
        }
        if let Some(n) = name.strip_prefix("hermite").and_then(|s| s.parse::<usize>().ok()) {
            return Some(Self::hermite(n));
        }
        Self::catalog().into_iter().find(|f| f.name == name)
    }

    /// `a·f + b·g` (closed forms are dropped).
    pub fn linear_combination(a: f64, f: &TestFunction, b: f64, g: &TestFunction) -> TestFunction {
        let (fe, ge) = (f.evaluator(), g.evaluator());
        let mut points = f.breakpoints.clone();
        points.extend_from_slice(&g.breakpoints);
        TestFunction::new(format!("{a}*{}+{b}*{}", f.name, g.name), move |t| a * fe(t) + b * ge(t))
            .with_support_hint(f.support_hint.max(g.support_hint))
            .with_breakpoints(&points)
    }

    /// Closed-form `∫_ℝ |f|^α dt`, if the catalog knows it.
    pub fn abs_power_integral(&self, alpha: f64) -> Option<f64> {
        self.abs_power_integral.and_then(|cf| cf(alpha))
    }

    /// `∫_ℝ |f|^α dt`: closed form when available, otherwise tanh-sinh over
    /// `[−support_hint, support_hint]`.
    pub fn power_integral_real_line(&self, alpha: f64) -> Result<f64> {
        let value = match self.abs_power_integral(alpha) {
            Some(v) => v,
            None => self.power_integral_on(alpha, -self.support_hint, self.support_hint)?,
        };
        if value.is_finite() && value >= 0.0 {
            Ok(value)
        } else {
            Err(argument(format!(
                "∫|{}|^{alpha} dt is not a finite non-negative number ({value})",
                self.name
            )))
        }
    }

    /// `∫_a^b |f|^α dt` by quadrature, on panels that widen geometrically
    /// away from the origin.
    pub fn power_integral_on(&self, alpha: f64, a: f64, b: f64) -> Result<f64> {
        let eval = &self.eval;
        let mut cuts = self.breakpoints.clone();
        cuts.push(0.0);
        for j in -2..=24 {
            let r = libm::ldexp(1.0, j);
            cuts.extend([-r, r]);
        }
        quad::integrate_piecewise(|t| libm::pow(eval(t).abs(), alpha), a, b, &cuts)
    }
}

/// `Σ_i f(t_i) (X(t_{i+1}) − X(t_i))`, left-endpoint evaluation.
pub fn riemann_stieltjes(f: &TestFunction, path: &SamplePath) -> Result<f64> {
    let grid = path.grid();
    let mut acc = 0.0;
    for (i, d) in path.increments().iter().enumerate() {
        let t = grid[i];
        let v = f.eval(t);
        if !v.is_finite() {
            return Err(Error::Evaluation { at: t, value: v });
        }
        acc += v * d;
    }
    Ok(acc)
}

/// Riemann-Stieltjes sum restricted to increments inside `[lo, hi]`.
///
/// On a path simulated over a wider grid this realizes the truncated
/// integral `∫_lo^hi f dX` on the same ω.
pub fn riemann_stieltjes_window(f: &TestFunction, path: &SamplePath, lo: f64, hi: f64) -> Result<f64> {
    let (start, end) = window_range(path.grid(), lo, hi);
    let grid = path.grid();
    let mut acc = 0.0;
    for (&t, &dx) in grid[start..end].iter().zip(&path.increments()[start..end]) {
        let v = f.eval(t);
        if !v.is_finite() {
            return Err(Error::Evaluation { at: t, value: v });
        }
        acc += v * dx;
    }
    Ok(acc)
}

/// Increment indices `i` with `[t_i, t_{i+1}] ⊆ [lo, hi]` (up to rounding).
pub fn window_range(grid: &[f64], lo: f64, hi: f64) -> (usize, usize) {
    let tol = 1e-9;
    let start = grid.partition_point(|&t| t < lo - tol);
    // first i+1 with t_{i+1} > hi + tol
    let stop = grid.partition_point(|&t| t <= hi + tol);
    let end = stop.saturating_sub(1).max(start);
    (start, end.min(grid.len().saturating_sub(1)))
}

/// One draw of `∫_ℝ f dX` from its exact law `S_α((∫|f|^α)^{1/α})`.
pub fn exact_integral_sampler<R: Rng + ?Sized>(f: &TestFunction, alpha: f64, rng: &mut R) -> Result<f64> {
    check_alpha(alpha)?;
    let power = f.power_integral_real_line(alpha)?;
    let law = StableLaw::new(alpha, libm::pow(power, 1.0 / alpha))?;
    Ok(law.sample(rng))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Scheme {
    LeftEndpoint,
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct IntegralEstimate {
    pub value: f64,
    pub truncation: f64,
    pub step: f64,
    pub seed: u64,
    pub scheme: Scheme,
}

/// Truncated integral `Y_T = ∫_{−T}^{T} f dX` on a fresh path.
pub fn integrate_real_line(f: &TestFunction, alpha: f64, half_width: f64, step: f64, seed: u64) -> Result<IntegralEstimate> {
    let grid = uniform_grid(half_width, step)?;
    let path = simulate_path(grid, alpha, seed)?;
    let value = riemann_stieltjes(f, &path)?;
    Ok(IntegralEstimate {
        value,
        truncation: half_width,
        step,
        seed,
        scheme: Scheme::LeftEndpoint,
    })
}

/// Upper bound on `E|∫_a^b f dX|`:
///
/// ```text
/// 4/(π(α−1)) ∫|f|^α + (2/π) ∫_{|u|>1} (1 − exp(−|u|^α ∫|f|^α)) / u² du
/// ```
pub fn mean_abs_bound(f: &TestFunction, alpha: f64, a: f64, b: f64) -> Result<f64> {
    check_alpha(alpha)?;
    if !(a < b) {
        return Err(argument(format!("interval needs a < b, got [{a}, {b}]")));
    }
    mean_abs_bound_from_power(alpha, f.power_integral_on(alpha, a, b)?)
}

/// [`mean_abs_bound`] given `power = ∫|f|^α`.
pub fn mean_abs_bound_from_power(alpha: f64, power: f64) -> Result<f64> {
    check_alpha(alpha)?;
    if !(power >= 0.0 && power.is_finite()) {
        return Err(argument(format!("power integral must be finite and non-negative, got {power}")));
    }
    if power == 0.0 {
        return Ok(0.0);
    }
    let linear = 4.0 / (PI * (alpha - 1.0)) * power;
    Ok(linear + 4.0 / PI * half_line_u_integral(alpha, power)?)
}

/// `∫_1^∞ (1 − e^{−u^α s}) / u² du`, integrated over `(1, U]` in the
/// variable `log u` and closed with the tail `1/U`, where `U^α s ≥ 40`.
pub fn half_line_u_integral(alpha: f64, s: f64) -> Result<f64> {
    let upper = libm::pow(40.0 / s, 1.0 / alpha).max(2.0);
    let log_upper = libm::log(upper);
    // transition where u^α s ≈ 1
    let knee = -libm::log(s) / alpha;
    let integrand = |x: f64| -libm::expm1(-libm::exp(alpha * x) * s) * libm::exp(-x);
    let body = quad::integrate_piecewise(integrand, 0.0, log_upper, &[knee - 2.0, knee, knee + 2.0])?;
    Ok(body + 1.0 / upper)
}

fn check_eps_c(eps_prime: f64, c: f64) -> Result<()> {
    if !(eps_prime > 0.0) || !(c > 0.0) {
        return Err(argument(format!("ε′ and C must be positive, got ε′ = {eps_prime}, C = {c}")));
    }
    Ok(())
}

/// Tail bound on a finite interval:
/// `C 2^{α+1} / ((α+1) ε′^α) ∫_a^b |f|^α dt`, for α ∈ [1, 2].
pub fn finite_tail_bound(f: &TestFunction, alpha: f64, a: f64, b: f64, eps_prime: f64, c: f64) -> Result<f64> {
    check_eps_c(eps_prime, c)?;
    if !(1.0..=2.0).contains(&alpha) {
        return Err(argument(format!("finite tail bound needs α ∈ [1, 2], got {alpha}")));
    }
    let power = f.power_integral_on(alpha, a, b)?;
    Ok(c * libm::pow(2.0, alpha + 1.0) / ((alpha + 1.0) * libm::pow(eps_prime, alpha)) * power)
}

/// Tail bound on ℝ at α = 2: `8C / (3 ε′²) ∫ f² dt`.
pub fn real_line_tail_bound(f: &TestFunction, eps_prime: f64, c: f64) -> Result<f64> {
    check_eps_c(eps_prime, c)?;
    let energy = f.power_integral_real_line(2.0)?;
    Ok(8.0 * c / (3.0 * eps_prime * eps_prime) * energy)
}

/// One evaluated bound, in the shape of the bounds CSV
/// (`lemma,f,alpha,a,b,eps_prime,C,bound`).
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct BoundRow {
    pub lemma: String,
    pub f: String,
    pub alpha: f64,
    pub a: f64,
    pub b: f64,
    pub eps_prime: Option<f64>,
    pub c: Option<f64>,
    pub bound: f64,
}

impl BoundRow {
    pub fn mean_abs(f: &TestFunction, alpha: f64, a: f64, b: f64) -> Result<Self> {
        Ok(Self {
            lemma: "mean_abs".to_string(),
            f: f.name().to_string(),
            alpha,
            a,
            b,
            eps_prime: None,
            c: None,
            bound: mean_abs_bound(f, alpha, a, b)?,
        })
    }

    pub fn finite_tail(f: &TestFunction, alpha: f64, a: f64, b: f64, eps_prime: f64, c: f64) -> Result<Self> {
        Ok(Self {
            lemma: "finite_tail".to_string(),
            f: f.name().to_string(),
            alpha,
            a,
            b,
            eps_prime: Some(eps_prime),
            c: Some(c),
            bound: finite_tail_bound(f, alpha, a, b, eps_prime, c)?,
        })
    }

    pub fn real_line_tail(f: &TestFunction, eps_prime: f64, c: f64) -> Result<Self> {
        Ok(Self {
            lemma: "real_line_tail".to_string(),
            f: f.name().to_string(),
            alpha: 2.0,
            a: f64::NEG_INFINITY,
            b: f64::INFINITY,
            eps_prime: Some(eps_prime),
            c: Some(c),
            bound: real_line_tail_bound(f, eps_prime, c)?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use crate::rng::{derive_seed, rng_from_seed};

    #[test]
    fn catalog_closed_forms_match_quadrature() {
        for f in TestFunction::catalog() {
            for alpha in [1.5, 2.0] {
                let Some(closed) = f.abs_power_integral(alpha) else {
                    continue;
                };
                let wide = f.support_hint().max(12.0);
                let numeric = f.power_integral_on(alpha, -wide, wide).unwrap();
                // cauchy_kernel has algebraic tails beyond the window
                let tol = if f.name() == "cauchy_kernel" { 1e-6 } else { 1e-10 };
                assert!((closed - numeric).abs() < tol * closed.max(1.0), "{} α={alpha}: {closed} vs {numeric}", f.name());
            }
        }
    }

    #[test]
    fn riemann_stieltjes_basics() {
        let path = simulate_path(vec![0.0, 1.0], 1.5, 3).unwrap();
        assert_eq!(riemann_stieltjes(&TestFunction::zero(), &path).unwrap(), 0.0);
        let one = TestFunction::new("one", |_| 1.0);
        assert_eq!(riemann_stieltjes(&one, &path).unwrap(), path.increments()[0]);
        let bad = TestFunction::new("bad", |t| if t == 0.0 { f64::NAN } else { 1.0 });
        assert!(matches!(riemann_stieltjes(&bad, &path), Err(Error::Evaluation { at, .. }) if at == 0.0));
    }

    #[test]
    fn window_selects_inner_increments() {
        let grid = uniform_grid(2.0, 0.5).unwrap();
        let (s, e) = window_range(&grid, -1.0, 1.0);
        assert_eq!((grid[s], grid[e]), (-1.0, 1.0));
        assert_eq!(e - s, 4);
        assert_eq!(window_range(&grid, -2.0, 2.0), (0, grid.len() - 1));
        let (s, e) = window_range(&grid, 0.0, 0.0);
        assert_eq!(s, e);
    }

    #[test]
    fn exact_sampler_variance_for_gaussian() {
        let f = TestFunction::gaussian();
        let mut rng = rng_from_seed(17);
        let n = 100_000;
        let xs: Vec<f64> = (0..n).map(|_| exact_integral_sampler(&f, 2.0, &mut rng).unwrap()).collect();
        let var = xs.iter().map(|x| x * x).sum::<f64>() / n as f64;
        // 2 ∫ e^{−2t²} dt = √(2π)
        assert!((var - 2.506_628_274_631).abs() < 0.04, "{var}");
        assert_eq!(exact_integral_sampler(&TestFunction::zero(), 1.5, &mut rng).unwrap(), 0.0);
    }

    #[test]
    fn exact_sampler_box_char_fn() {
        let f = TestFunction::box01();
        let mut rng = rng_from_seed(18);
        let n = 100_000;
        let ecf = (0..n)
            .map(|_| libm::cos(exact_integral_sampler(&f, 1.5, &mut rng).unwrap()))
            .sum::<f64>()
            / n as f64;
        assert!((ecf - libm::exp(-1.0)).abs() < 0.01);
    }

    #[test]
    fn exact_sampler_needs_power_integral() {
        let nan = TestFunction::new("nan", |_| f64::NAN).with_support_hint(1.0);
        let mut rng = rng_from_seed(1);
        assert!(matches!(exact_integral_sampler(&nan, 2.0, &mut rng), Err(Error::Argument(_))));
    }

    #[test]
    fn real_line_integral_of_zero() {
        let est = integrate_real_line(&TestFunction::zero(), 2.0, 1.0, 0.1, 4).unwrap();
        assert_eq!(est.value, 0.0);
        assert_eq!(est.scheme, Scheme::LeftEndpoint);
    }

    #[test]
    fn nested_truncations_share_inner_sum() {
        let f = TestFunction::gaussian();
        let grid = uniform_grid(2.0, 0.01).unwrap();
        let path = simulate_path(grid, 2.0, derive_seed(9, 0)).unwrap();
        let inner = riemann_stieltjes_window(&f, &path, -1.0, 1.0).unwrap();
        let outer = riemann_stieltjes_window(&f, &path, -2.0, 2.0).unwrap();
        let left = riemann_stieltjes_window(&f, &path, -2.0, -1.0).unwrap();
        let right = riemann_stieltjes_window(&f, &path, 1.0, 2.0).unwrap();
        assert!((outer - inner - left - right).abs() < 1e-12);
        assert_eq!(outer, riemann_stieltjes(&f, &path).unwrap());
    }

    #[test]
    fn mean_abs_bound_values() {
        assert_eq!(mean_abs_bound(&TestFunction::zero(), 2.0, 0.0, 1.0).unwrap(), 0.0);
        // (4/π)(2 − 1/e + √π erfc(1)), checked in 60-digit arithmetic
        let b = mean_abs_bound(&TestFunction::box01(), 2.0, 0.0, 1.0).unwrap();
        assert!((b - 2.433_066_733_748_143).abs() < 1e-10, "{b}");
        let b = mean_abs_bound(&TestFunction::box01(), 1.5, 0.0, 1.0).unwrap();
        assert!((b - 3.677_784_952_567_506).abs() < 1e-10, "{b}");
        assert!(mean_abs_bound(&TestFunction::box01(), 1.0, 0.0, 1.0).is_err());
        assert!(mean_abs_bound(&TestFunction::box01(), 2.0, 1.0, 0.0).is_err());
    }

    #[test]
    fn u_integral_matches_gaussian_closed_form() {
        // α = 2: ∫_1^∞ (1 − e^{−s u²})/u² du = 1 − e^{−s} + √(πs) erfc(√s)
        for s in [1e-12, 1e-6, 1e-3, 0.1, 1.0, 7.0, 1e3, 1e8] {
            let closed = -libm::expm1(-s) + libm::sqrt(PI * s) * libm::erfc(libm::sqrt(s));
            let got = half_line_u_integral(2.0, s).unwrap();
            assert!((got - closed).abs() < 1e-11 * closed.max(1e-300) + 1e-14, "s={s}: {got} vs {closed}");
        }
    }

    #[test]
    fn mean_abs_bound_increases_with_f() {
        let f = TestFunction::gaussian();
        let twice = TestFunction::linear_combination(2.0, &f, 0.0, &TestFunction::zero());
        for alpha in [1.2, 1.5, 2.0] {
            let a = mean_abs_bound(&f, alpha, -6.0, 6.0).unwrap();
            let b = mean_abs_bound(&twice, alpha, -6.0, 6.0).unwrap();
            assert!(b > a);
        }
    }

    #[test]
    fn tail_bound_examples() {
        let one = TestFunction::box01();
        let b = finite_tail_bound(&one, 2.0, 0.0, 1.0, 1.0, 1.0).unwrap();
        assert!((b - 8.0 / 3.0).abs() < 1e-12);
        let b2 = finite_tail_bound(&one, 2.0, 0.0, 1.0, 2.0, 1.0).unwrap();
        assert!((b / b2 - 4.0).abs() < 1e-12);
        let b15 = finite_tail_bound(&one, 1.5, 0.0, 1.0, 1.0, 1.0).unwrap();
        let b15x = finite_tail_bound(&one, 1.5, 0.0, 1.0, 2.0, 1.0).unwrap();
        assert!((b15 / b15x - libm::pow(2.0, 1.5)).abs() < 1e-12);
        assert_eq!(finite_tail_bound(&TestFunction::zero(), 2.0, 0.0, 1.0, 1.0, 1.0).unwrap(), 0.0);
        assert!(finite_tail_bound(&one, 2.0, 0.0, 1.0, 0.0, 1.0).is_err());
        assert!(finite_tail_bound(&one, 2.0, 0.0, 1.0, 1.0, -1.0).is_err());

        let g = real_line_tail_bound(&TestFunction::gaussian(), 1.0, 1.0).unwrap();
        assert!((g - 3.342_171_032_841_334).abs() < 1e-12);
        let g2 = real_line_tail_bound(&TestFunction::gaussian(), 2.0, 1.0).unwrap();
        assert!((g / g2 - 4.0).abs() < 1e-12);
        assert_eq!(real_line_tail_bound(&TestFunction::zero(), 1.0, 1.0).unwrap(), 0.0);
    }

    #[test]
    fn catalog_lookup() {
        assert_eq!(TestFunction::by_name("box01").unwrap().name(), "box01");
        assert_eq!(TestFunction::by_name("hermite3").unwrap().eval(1.0), -4.0);
        assert!(TestFunction::by_name("nope").is_none());
    }
}
