//! Fourier-Hermite coefficients, random coefficients, partial sums of the
//! random Fourier-Hermite series/transform, and the randomized-eigenvalue
//! Fourier transform.
//!
//! Notation used throughout:
//!
//! - `p_k(t) = H_k(t) / ‖H_k‖`, orthonormal for the weight `e^{−t²}`;
//! - `φ_k(t) = p_k(t) g(t)` with `g(t) = e^{−t²}` (paper-literal basis) or
//!   `e^{−t²/2}` (half-weight basis);
//! - `c_k = ∫ f φ_k dt`, `A_k(ω) = ∫ φ_k dX(t, ω)`;
//! - `q_k(y)` is the `y`-dependence of the series: `H_k(y)` for
//!   [`SeriesScaling::Literal`], `p_k(y)` for [`SeriesScaling::Orthonormal`].
//!
//! With these, `S_n(y, ω) = Σ_{k≤n} c_k λ_k A_k q_k(y)` and the kernel is
//! `f_n(y, t) = Σ_{k≤n} c_k λ_k q_k(y) p_k(t)`, so that
//! `S_n(y, ω) = ∫ f_n(y, t) g(t) dX(t, ω)` holds term by term on any
//! discretized path.

use alloc::format;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{argument, Error, Result};
use crate::hermite::{orthonormal_polys, HermiteBasis, QuadratureKind, QuadratureRule, WeightConvention};
use crate::integral::TestFunction;
use crate::rng::counter_uniform;
use crate::stable::SamplePath;

/// Half-width a path must cover before random coefficients are formed.
pub const REQUIRED_HALF_WIDTH: f64 = 6.0;

/// Extra Gauss-Hermite nodes required beyond the expansion order.
pub const RULE_MARGIN: usize = 16;

/// Eigenvalue sequence attached to the series.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum EigenMode {
    /// `λ_k ≡ 1`: the plain random Fourier-Hermite series.
    #[default]
    None,
    /// `λ_k = e^{−ikπ} = (−1)^k`.
    Paper,
    /// `λ_k = exp(−iπ Rand(k))` with `Rand(k)` i.i.d. uniform on `[0, 1)`
    /// drawn from `seed`.
    Randomized { seed: u64 },
}

impl EigenMode {
    pub fn label(&self) -> &'static str {
        match self {
            EigenMode::None => "none",
            EigenMode::Paper => "paper",
            EigenMode::Randomized { .. } => "random",
        }
    }
}

/// How `H_k(y)` enters the partial sums.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum SeriesScaling {
    /// `q_k(y) = H_k(y) / ‖H_k‖`. The series converges.
    #[default]
    Orthonormal,
    /// `q_k(y) = H_k(y)`, the sum as literally written. Its terms grow
    /// factorially for any non-polynomial f; kept for comparison.
    Literal,
}

impl SeriesScaling {
    pub fn label(&self) -> &'static str {
        match self {
            SeriesScaling::Orthonormal => "orthonormal",
            SeriesScaling::Literal => "literal",
        }
    }
}

/// `λ_0..=λ_n` for `mode`.
pub fn eigenvalues(mode: EigenMode, n: usize) -> Vec<Complex64> {
    (0..=n)
        .map(|k| match mode {
            EigenMode::None => Complex64::new(1.0, 0.0),
            EigenMode::Paper => Complex64::new(if k % 2 == 0 { 1.0 } else { -1.0 }, 0.0),
            EigenMode::Randomized { seed } => unit_phase(counter_uniform(seed, k as u64)),
        })
        .collect()
}

/// `exp(−iπ r)`.
pub fn unit_phase(r: f64) -> Complex64 {
    Complex64::new(libm::cos(PI * r), -libm::sin(PI * r))
}

/// I.i.d. uniform `[0, 1)` sequence `Rand(0..=n)` addressed by `seed`.
pub fn random_phases(seed: u64, n: usize) -> Vec<f64> {
    (0..=n).map(|k| counter_uniform(seed, k as u64)).collect()
}

fn check_rule(rule: &QuadratureRule, n: usize) -> Result<()> {
    if rule.kind() != QuadratureKind::GaussHermite {
        return Err(argument("Fourier-Hermite coefficients need a Gauss-Hermite rule"));
    }
    if rule.order() < n + RULE_MARGIN {
        return Err(argument(format!(
            "rule order {} too small for expansion order {n} (need at least {})",
            rule.order(),
            n + RULE_MARGIN
        )));
    }
    Ok(())
}

/// `c_0..=c_n` with `c_k = ∫ f φ_k dt`, by Gauss-Hermite quadrature.
pub fn coefficients(f: &TestFunction, n: usize, basis: &HermiteBasis, rule: &QuadratureRule) -> Result<Vec<f64>> {
    basis.check(n)?;
    check_rule(rule, n)?;
    let mut out = vec![0.0; n + 1];
    let mut p = vec![0.0; n + 1];
    for (&x, &w) in rule.nodes().iter().zip(rule.weights()) {
        let fx = f.eval(x);
        if !fx.is_finite() {
            return Err(Error::Evaluation { at: x, value: fx });
        }
        let scaled = match basis.convention() {
            WeightConvention::PaperLiteral => w * fx,
            WeightConvention::HalfWeight => w * libm::exp(0.5 * x * x) * fx,
        };
        orthonormal_polys(x, &mut p);
        for (c, pk) in out.iter_mut().zip(&p) {
            *c += scaled * pk;
        }
    }
    Ok(out)
}

fn check_span(path: &SamplePath) -> Result<()> {
    let (lo, hi) = path.span();
    let tol = 1e-9;
    if lo > -REQUIRED_HALF_WIDTH + tol || hi < REQUIRED_HALF_WIDTH - tol {
        return Err(Error::InsufficientSpan {
            required: REQUIRED_HALF_WIDTH,
            lo,
            hi,
        });
    }
    Ok(())
}

/// `A_0..=A_n` with `A_k = Σ_i φ_k(t_i) ΔX_i` on one path.
pub fn random_coeffs(basis: &HermiteBasis, n: usize, path: &SamplePath) -> Result<Vec<f64>> {
    basis.check(n)?;
    check_span(path)?;
    let mut out = vec![0.0; n + 1];
    let mut phi = vec![0.0; n + 1];
    for (&t, &d) in path.grid().iter().zip(path.increments()) {
        basis.phi_all(t, &mut phi)?;
        for (a, ph) in out.iter_mut().zip(&phi) {
            *a += ph * d;
        }
    }
    Ok(out)
}

/// The triple `(c_k, A_k(ω), λ_k)` for one path.
#[derive(Debug, Clone)]
pub struct RfhExpansion {
    order: usize,
    coeffs: Vec<f64>,
    random_coeffs: Vec<f64>,
    eigen_mode: EigenMode,
    eigenvalues: Vec<Complex64>,
    scaling: SeriesScaling,
    basis: Arc<HermiteBasis>,
    path_seed: u64,
}

impl RfhExpansion {
    pub fn new(
        basis: Arc<HermiteBasis>,
        coeffs: Vec<f64>,
        random_coeffs: Vec<f64>,
        eigen_mode: EigenMode,
        scaling: SeriesScaling,
        path_seed: u64,
    ) -> Result<Self> {
        if coeffs.is_empty() || coeffs.len() != random_coeffs.len() {
            return Err(argument(format!(
                "coefficient arrays must be non-empty and of equal length ({} vs {})",
                coeffs.len(),
                random_coeffs.len()
            )));
        }
        let order = coeffs.len() - 1;
        basis.check(order)?;
        Ok(Self {
            order,
            eigenvalues: eigenvalues(eigen_mode, order),
            coeffs,
            random_coeffs,
            eigen_mode,
            scaling,
            basis,
            path_seed,
        })
    }

    /// Coefficients by quadrature and random coefficients from `path`.
    pub fn build(
        f: &TestFunction,
        basis: Arc<HermiteBasis>,
        rule: &QuadratureRule,
        order: usize,
        path: &SamplePath,
        eigen_mode: EigenMode,
        scaling: SeriesScaling,
    ) -> Result<Self> {
        let coeffs = coefficients(f, order, &basis, rule)?;
        let random = random_coeffs(&basis, order, path)?;
        Self::new(basis, coeffs, random, eigen_mode, scaling, path.seed())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn random_coeffs(&self) -> &[f64] {
        &self.random_coeffs
    }

    pub fn eigenvalues(&self) -> &[Complex64] {
        &self.eigenvalues
    }

    pub fn eigen_mode(&self) -> EigenMode {
        self.eigen_mode
    }

    pub fn scaling(&self) -> SeriesScaling {
        self.scaling
    }

    pub fn basis(&self) -> &HermiteBasis {
        &self.basis
    }

    pub fn path_seed(&self) -> u64 {
        self.path_seed
    }

    fn check_order(&self, n: usize) -> Result<()> {
        if n > self.order {
            Err(Error::Range {
                requested: n,
                order: self.order,
            })
        } else {
            Ok(())
        }
    }

    /// `q_0(y)..=q_n(y)`.
    pub fn series_factors(&self, y: f64, n: usize) -> Result<Vec<f64>> {
        self.check_order(n)?;
        let mut q = vec![0.0; n + 1];
        orthonormal_polys(y, &mut q);
        if self.scaling == SeriesScaling::Literal {
            for (k, v) in q.iter_mut().enumerate() {
                *v *= libm::exp(self.basis.log_norms()[k]);
            }
        }
        Ok(q)
    }

    /// `c_k λ_k q_k(y)` for `k ≤ n`: the weights multiplying `A_k` in `S_n`
    /// and `p_k(t)` in the kernel.
    fn kernel_weights(&self, y: f64, n: usize) -> Result<Vec<Complex64>> {
        let q = self.series_factors(y, n)?;
        Ok((0..=n).map(|k| self.eigenvalues[k] * (self.coeffs[k] * q[k])).collect())
    }

    /// `S_n(y, ω) = Σ_{k≤n} c_k λ_k A_k q_k(y)`.
    pub fn partial_sum(&self, y: f64, n: usize) -> Result<Complex64> {
        let w = self.kernel_weights(y, n)?;
        Ok(w.iter().zip(&self.random_coeffs).map(|(w, a)| w * a).sum())
    }

    /// `S_0(y)..=S_order(y)`, accumulated in order.
    pub fn partial_sums(&self, y: f64) -> Result<Vec<Complex64>> {
        let w = self.kernel_weights(y, self.order)?;
        let mut acc = Complex64::new(0.0, 0.0);
        Ok(w.iter()
            .zip(&self.random_coeffs)
            .map(|(w, a)| {
                acc += w * a;
                acc
            })
            .collect())
    }

    /// Kernel without eigenvalues, `Σ_{k≤n} c_k q_k(y) p_k(t)`; under the
    /// literal scaling this is `Σ c_k H_k(t) H_k(y) / ‖H_k‖`.
    pub fn kernel_fn(&self, y: f64, t: f64, n: usize) -> Result<f64> {
        let q = self.series_factors(y, n)?;
        let mut p = vec![0.0; n + 1];
        orthonormal_polys(t, &mut p);
        Ok((0..=n).map(|k| self.coeffs[k] * q[k] * p[k]).sum())
    }

    /// Kernel with eigenvalues, `Σ_{k≤n} c_k λ_k q_k(y) p_k(t)`.
    pub fn eigen_kernel(&self, y: f64, t: f64, n: usize) -> Result<Complex64> {
        let w = self.kernel_weights(y, n)?;
        let mut p = vec![0.0; n + 1];
        orthonormal_polys(t, &mut p);
        Ok(w.iter().zip(&p).map(|(w, p)| w * p).sum())
    }

    /// `f_n(y, t_i) g(t_i)` at the left endpoint of every increment of a
    /// path on `grid`; integrating these against the increments gives
    /// [`Self::target_integral`].
    pub fn target_weights(&self, y: f64, n_kernel: usize, grid: &[f64]) -> Result<Vec<Complex64>> {
        let w = self.kernel_weights(y, n_kernel)?;
        let gauss = self.basis.convention().gaussian_exponent();
        let mut p = vec![0.0; n_kernel + 1];
        let points = grid.len().saturating_sub(1);
        Ok(grid[..points]
            .iter()
            .map(|&t| {
                orthonormal_polys(t, &mut p);
                let k: Complex64 = w.iter().zip(&p).map(|(w, p)| w * p).sum();
                k * libm::exp(-gauss * t * t)
            })
            .collect())
    }

    /// `∫ f_{n_kernel}(y, t) g(t) dX(t, ω)` as a left-endpoint sum on `path`.
    pub fn target_integral(&self, y: f64, n_kernel: usize, path: &SamplePath) -> Result<Complex64> {
        let weights = self.target_weights(y, n_kernel, path.grid())?;
        Ok(integrate_weights(&weights, path))
    }
}

/// `Σ_i w_i ΔX_i`.
pub fn integrate_weights(weights: &[Complex64], path: &SamplePath) -> Complex64 {
    weights.iter().zip(path.increments()).map(|(w, d)| w * d).sum()
}

/// Coefficients of `f` multiplied by randomized unit eigenvalues.
#[derive(Debug, Clone)]
pub struct RandomizedRft {
    coeffs: Vec<f64>,
    eigenvalues: Vec<Complex64>,
    basis: HermiteBasis,
}

/// `t ↦ Σ_{n≤N} c_n exp(−iπ Rand(n)) φ_n(t)`.
pub fn randomized_rft(
    f: &TestFunction,
    n: usize,
    rand_seq: &[f64],
    basis: &HermiteBasis,
    rule: &QuadratureRule,
) -> Result<RandomizedRft> {
    if rand_seq.len() < n + 1 {
        return Err(argument(format!("need {} random phases, got {}", n + 1, rand_seq.len())));
    }
    if let Some(bad) = rand_seq[..=n].iter().find(|r| !(0.0..1.0).contains(*r)) {
        return Err(argument(format!("random phase {bad} outside [0, 1)")));
    }
    let coeffs = coefficients(f, n, basis, rule)?;
    let eigenvalues = rand_seq[..=n].iter().map(|&r| unit_phase(r)).collect();
    Ok(RandomizedRft {
        coeffs,
        eigenvalues,
        basis: basis.clone(),
    })
}

impl RandomizedRft {
    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn eigenvalues(&self) -> &[Complex64] {
        &self.eigenvalues
    }

    /// `c_n λ_n`.
    pub fn transformed_coeffs(&self) -> Vec<Complex64> {
        self.coeffs.iter().zip(&self.eigenvalues).map(|(c, l)| l * c).collect()
    }

    /// Multiplies by the conjugate eigenvalues.
    pub fn inverse_coeffs(&self, transformed: &[Complex64]) -> Vec<Complex64> {
        transformed.iter().zip(&self.eigenvalues).map(|(c, l)| c * l.conj()).collect()
    }

    /// `Σ a_n φ_n(t)` for arbitrary complex coefficients.
    pub fn evaluate(&self, coeffs: &[Complex64], t: f64) -> Result<Complex64> {
        let mut phi = vec![0.0; coeffs.len()];
        self.basis.phi_all(t, &mut phi)?;
        Ok(coeffs.iter().zip(&phi).map(|(a, p)| a * p).sum())
    }

    /// The transform at `t`.
    pub fn eval(&self, t: f64) -> Result<Complex64> {
        self.evaluate(&self.transformed_coeffs(), t)
    }

    /// `Σ c_n φ_n(t)`, the truncated expansion before randomization.
    pub fn truncated(&self, t: f64) -> Result<f64> {
        let mut phi = vec![0.0; self.coeffs.len()];
        self.basis.phi_all(t, &mut phi)?;
        Ok(self.coeffs.iter().zip(&phi).map(|(c, p)| c * p).sum())
    }

    /// `(Σ c_n², Σ |c_n λ_n|²)`.
    pub fn energies(&self) -> (f64, f64) {
        let before = self.coeffs.iter().map(|c| c * c).sum();
        let after = self.transformed_coeffs().iter().map(|c| c.norm_sqr()).sum();
        (before, after)
    }
}

/// `∫ f² e^{−t²} dt` by the rule.
pub fn weighted_energy(f: &TestFunction, rule: &QuadratureRule) -> f64 {
    rule.integrate(|x| {
        let v = f.eval(x);
        v * v
    })
}

/// Weighted projection coefficients `⟨f, p_k⟩ = ∫ f p_k e^{−t²} dt`, `k ≤ n`.
pub fn projection_coeffs(f: &TestFunction, n: usize, basis: &HermiteBasis, rule: &QuadratureRule) -> Result<Vec<f64>> {
    let weighted = HermiteBasis::new(basis.max_order(), WeightConvention::PaperLiteral);
    coefficients(f, n, &weighted, rule)
}

/// `∫ |f − P_n f|² e^{−t²} dt` where `P_n` is the orthogonal projection in
/// `L²(e^{−t²})` onto `span{H_0..H_n}`.
pub fn projection_error(f: &TestFunction, n: usize, basis: &HermiteBasis, rule: &QuadratureRule) -> Result<f64> {
    Ok(*projection_error_curve(f, n, basis, rule)?.last().expect("curve has n + 1 entries"))
}

/// [`projection_error`] for every order `0..=n_max`.
pub fn projection_error_curve(f: &TestFunction, n_max: usize, basis: &HermiteBasis, rule: &QuadratureRule) -> Result<Vec<f64>> {
    let a = projection_coeffs(f, n_max, basis, rule)?;
    let m = rule.order();
    let mut residual: Vec<f64> = rule.nodes().iter().map(|&x| f.eval(x)).collect();
    let mut table = vec![0.0; (n_max + 1) * m];
    let mut p = vec![0.0; n_max + 1];
    for (i, &x) in rule.nodes().iter().enumerate() {
        orthonormal_polys(x, &mut p);
        for k in 0..=n_max {
            table[k * m + i] = p[k];
        }
    }
    let mut curve = Vec::with_capacity(n_max + 1);
    for k in 0..=n_max {
        let row = &table[k * m..(k + 1) * m];
        for (r, pk) in residual.iter_mut().zip(row) {
            *r -= a[k] * pk;
        }
        curve.push(residual.iter().zip(rule.weights()).map(|(r, w)| w * r * r).sum());
    }
    Ok(curve)
}
