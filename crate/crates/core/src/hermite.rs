//! Hermite polynomials (physicists' convention), Hermite-Gaussian functions
//! and Gauss-Hermite quadrature.
//!
//! All high-order evaluation goes through the normalized recurrence for the
//! orthonormal Hermite functions
//!
//! ```text
//! h_0(t) = π^{-1/4} e^{-t²/2}
//! h_{n+1}(t) = t √(2/(n+1)) h_n(t) − √(n/(n+1)) h_{n-1}(t)
//! ```
//!
//! so that `H_n(t) e^{-t²/2} / ‖H_n‖` never forms the huge `H_n` or the huge
//! norm `√(2^n √π n!)` separately.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::error::{argument, Error, Result};

/// `π^{-1/4}`.
pub const PI_POW_M_QUARTER: f64 = 0.751_125_544_464_942_5;

/// Physicists' Hermite polynomial `H_n(t)` by the three-term recurrence.
///
/// If the recurrence leaves the range of `f64` the result is an infinity
/// carrying the sign of the leading term `(2t)^n`, never a silently wrong
/// finite number.
pub fn hermite_poly(n: usize, t: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut cur = 2.0 * t;
    for k in 1..n {
        let next = 2.0 * t * cur - 2.0 * k as f64 * prev;
        prev = cur;
        cur = next;
        if !cur.is_finite() {
            let negative = t < 0.0 && n % 2 == 1;
            return if negative {
                f64::NEG_INFINITY
            } else {
                f64::INFINITY
            };
        }
    }
    cur
}

/// Fills `out[k]` with the orthonormal Hermite function `h_k(t)` for
/// `k < out.len()`.
pub fn hermite_functions(t: f64, out: &mut [f64]) {
    fill_recurrence(t, PI_POW_M_QUARTER * libm::exp(-0.5 * t * t), out);
}

/// Fills `out[k]` with `p_k(t) = H_k(t) / ‖H_k‖`, the polynomials that are
/// orthonormal for the weight `e^{-t²}`.
pub fn orthonormal_polys(t: f64, out: &mut [f64]) {
    fill_recurrence(t, PI_POW_M_QUARTER, out);
}

#[inline]
fn fill_recurrence(t: f64, start: f64, out: &mut [f64]) {
    let Some(first) = out.first_mut() else {
        return;
    };
    *first = start;
    if out.len() == 1 {
        return;
    }
    out[1] = core::f64::consts::SQRT_2 * t * start;
    for k in 1..out.len() - 1 {
        let kf = k as f64;
        out[k + 1] = t * libm::sqrt(2.0 / (kf + 1.0)) * out[k] - libm::sqrt(kf / (kf + 1.0)) * out[k - 1];
    }
}

/// Gaussian factor used inside the Hermite-Gaussian functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum WeightConvention {
    /// `φ_n(t) = H_n(t) e^{-t²} / √(2^n √π n!)`.
    #[default]
    PaperLiteral,
    /// `φ_n(t) = H_n(t) e^{-t²/2} / √(2^n √π n!)`, the L²-normalized functions.
    HalfWeight,
}

impl WeightConvention {
    /// Exponent `a` of the factor `e^{-a t²}` in `φ_n`.
    pub fn gaussian_exponent(self) -> f64 {
        match self {
            WeightConvention::PaperLiteral => 1.0,
            WeightConvention::HalfWeight => 0.5,
        }
    }
}

/// Norms `√(2^n √π n!)` of `H_0..=H_max_order`, stored as logarithms.
#[derive(Debug, Clone, PartialEq)]
pub struct HermiteBasis {
    max_order: usize,
    log_norms: Vec<f64>,
    convention: WeightConvention,
}

impl HermiteBasis {
    pub fn new(max_order: usize, convention: WeightConvention) -> Self {
        let mut log_norms = Vec::with_capacity(max_order + 1);
        // ‖H_0‖² = √π
        let mut acc = 0.25 * libm::log(PI);
        log_norms.push(acc);
        for n in 0..max_order {
            acc += 0.5 * libm::log(2.0 * (n + 1) as f64);
            log_norms.push(acc);
        }
        Self {
            max_order,
            log_norms,
            convention,
        }
    }

    pub fn max_order(&self) -> usize {
        self.max_order
    }

    pub fn convention(&self) -> WeightConvention {
        self.convention
    }

    pub fn log_norms(&self) -> &[f64] {
        &self.log_norms
    }

    /// `log √(2^n √π n!)`.
    pub fn log_norm(&self, n: usize) -> Result<f64> {
        self.check(n)?;
        Ok(self.log_norms[n])
    }

    /// `√(2^n √π n!)`; overflows to infinity only far beyond order 300.
    pub fn norm(&self, n: usize) -> Result<f64> {
        Ok(libm::exp(self.log_norm(n)?))
    }

    pub fn check(&self, n: usize) -> Result<()> {
        if n > self.max_order {
            Err(Error::Capacity {
                order: n,
                max_order: self.max_order,
            })
        } else {
            Ok(())
        }
    }

    /// Hermite-Gaussian function `φ_n(t)` in this basis' convention.
    pub fn phi(&self, n: usize, t: f64) -> Result<f64> {
        self.check(n)?;
        let mut buf = vec![0.0; n + 1];
        self.phi_all(t, &mut buf)?;
        Ok(buf[n])
    }

    /// Fills `out[k] = φ_k(t)` for `k < out.len()`.
    pub fn phi_all(&self, t: f64, out: &mut [f64]) -> Result<()> {
        if let Some(top) = out.len().checked_sub(1) {
            self.check(top)?;
        }
        let start = match self.convention {
            WeightConvention::HalfWeight => PI_POW_M_QUARTER * libm::exp(-0.5 * t * t),
            WeightConvention::PaperLiteral => PI_POW_M_QUARTER * libm::exp(-t * t),
        };
        // The residual Gaussian factor of PaperLiteral enters through the
        // starting value; the recurrence is linear.
        fill_recurrence(t, start, out);
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum QuadratureKind {
    /// `∫ g(t) e^{-t²} dt` over ℝ.
    GaussHermite,
    /// `∫_a^b g(t) dt` with the double-exponential substitution.
    TanhSinh { a: f64, b: f64 },
}

/// Nodes and positive weights of a quadrature rule.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
    order: usize,
    kind: QuadratureKind,
}

impl QuadratureRule {
    pub(crate) fn from_parts(nodes: Vec<f64>, weights: Vec<f64>, kind: QuadratureKind) -> Self {
        debug_assert_eq!(nodes.len(), weights.len());
        Self {
            order: nodes.len(),
            nodes,
            weights,
            kind,
        }
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn kind(&self) -> QuadratureKind {
        self.kind
    }

    /// `Σ w_i g(x_i)`.
    pub fn integrate(&self, mut g: impl FnMut(f64) -> f64) -> f64 {
        self.nodes.iter().zip(&self.weights).map(|(&x, &w)| w * g(x)).sum()
    }
}

/// Largest supported Gauss-Hermite order.
pub const MAX_GAUSS_HERMITE_ORDER: usize = 256;

/// Gauss-Hermite rule with `m` nodes for `∫ g(t) e^{-t²} dt`.
///
/// Nodes are the eigenvalues of the Jacobi matrix (zero diagonal,
/// off-diagonal `√(k/2)`), polished by Newton steps on `h_m`. Weights come
/// from `w_i = e^{-x_i²} / (m h_{m-1}(x_i)²)`, which avoids forming
/// eigenvectors.
pub fn gauss_hermite_rule(m: usize) -> Result<QuadratureRule> {
    if m == 0 || m > MAX_GAUSS_HERMITE_ORDER {
        return Err(argument(alloc::format!(
            "Gauss-Hermite order must lie in 1..={MAX_GAUSS_HERMITE_ORDER}, got {m}"
        )));
    }
    let mut diag = vec![0.0; m];
    let mut off: Vec<f64> = (1..=m).map(|k| libm::sqrt(k as f64 / 2.0)).collect();
    off[m - 1] = 0.0;
    symmetric_tridiagonal_eigenvalues(&mut diag, &mut off)?;
    diag.sort_by(f64::total_cmp);

    let mut buf = vec![0.0; m + 1];
    let mf = m as f64;
    for x in diag.iter_mut() {
        for _ in 0..3 {
            hermite_functions(*x, &mut buf);
            let denom = libm::sqrt(2.0 * mf) * buf[m - 1];
            if denom == 0.0 {
                break;
            }
            let step = buf[m] / denom;
            *x -= step;
            if step.abs() <= 1e-16 * x.abs().max(1.0) {
                break;
            }
        }
    }
    // Exact mirror symmetry.
    for i in 0..m / 2 {
        let r = 0.5 * (diag[m - 1 - i] - diag[i]);
        diag[i] = -r;
        diag[m - 1 - i] = r;
    }
    if m % 2 == 1 {
        diag[m / 2] = 0.0;
    }

    let mut weights = Vec::with_capacity(m);
    for &x in &diag {
        hermite_functions(x, &mut buf[..m]);
        let h = buf[m - 1];
        weights.push(libm::exp(-x * x) / (mf * h * h));
    }
    for i in 0..m / 2 {
        let w = 0.5 * (weights[i] + weights[m - 1 - i]);
        weights[i] = w;
        weights[m - 1 - i] = w;
    }
    Ok(QuadratureRule::from_parts(diag, weights, QuadratureKind::GaussHermite))
}

/// Eigenvalues of a symmetric tridiagonal matrix by implicit QL with
/// Wilkinson shifts. `diag` is overwritten by the eigenvalues; `off[i]`
/// couples rows `i` and `i + 1` (the last entry is ignored).
pub fn symmetric_tridiagonal_eigenvalues(diag: &mut [f64], off: &mut [f64]) -> Result<()> {
    let n = diag.len();
    if off.len() != n {
        return Err(argument("off-diagonal length must equal diagonal length"));
    }
    if n == 0 {
        return Ok(());
    }
    off[n - 1] = 0.0;
    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = diag[m].abs() + diag[m + 1].abs();
                if off[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > 64 {
                return Err(argument("tridiagonal QL failed to converge"));
            }
            let mut g = (diag[l + 1] - diag[l]) / (2.0 * off[l]);
            let mut r = libm::hypot(g, 1.0);
            g = diag[m] - diag[l] + off[l] / (g + libm::copysign(r, g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut i = m;
            let mut deflated = false;
            while i > l {
                i -= 1;
                let f = s * off[i];
                let b = c * off[i];
                r = libm::hypot(f, g);
                off[i + 1] = r;
                if r == 0.0 {
                    diag[i + 1] -= p;
                    off[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = diag[i + 1] - p;
                r = (diag[i] - g) * s + 2.0 * c * b;
                p = s * r;
                diag[i + 1] = g + p;
                g = c * r - b;
            }
            if deflated {
                continue;
            }
            diag[l] -= p;
            off[l] = g;
            off[m] = 0.0;
        }
    }
    Ok(())
}

/// `Σ w_i g(x_i) h(x_i)`: for a Gauss-Hermite rule, `∫ g h e^{-t²} dt`.
pub fn weighted_inner_product(
    g: impl Fn(f64) -> f64,
    h: impl Fn(f64) -> f64,
    rule: &QuadratureRule,
) -> Result<f64> {
    let mut acc = 0.0;
    for (&x, &w) in rule.nodes().iter().zip(rule.weights()) {
        let value = g(x) * h(x);
        if !value.is_finite() {
            return Err(Error::Evaluation { at: x, value });
        }
        acc += w * value;
    }
    Ok(acc)
}
