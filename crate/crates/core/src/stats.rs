//! Small statistics toolbox: normal CDF, confidence intervals and the
//! two-sample Kolmogorov-Smirnov test.

use alloc::vec::Vec;
use core::f64::consts::SQRT_2;

/// Two-sided 99% standard normal quantile.
pub const Z99: f64 = 2.575_829_303_548_901;

pub fn normal_cdf(x: f64) -> f64 {
    0.5 * libm::erfc(-x / SQRT_2)
}

/// Wilson score interval `(lower, upper)` for `successes` out of `n`.
pub fn wilson_interval(successes: usize, n: usize, z: f64) -> (f64, f64) {
    if n == 0 {
        return (0.0, 1.0);
    }
    let nf = n as f64;
    let p = successes as f64 / nf;
    let z2 = z * z;
    let denom = 1.0 + z2 / nf;
    let center = (p + z2 / (2.0 * nf)) / denom;
    let half = z * libm::sqrt(p * (1.0 - p) / nf + z2 / (4.0 * nf * nf)) / denom;
    let lower = if successes == 0 { 0.0 } else { (center - half).max(0.0) };
    let upper = if successes == n { 1.0 } else { (center + half).min(1.0) };
    (lower, upper)
}

/// Sample mean and normal-approximation half-width `z·s/√n`.
pub fn mean_with_halfwidth(xs: &[f64], z: f64) -> (f64, f64) {
    let n = xs.len();
    if n == 0 {
        return (0.0, 0.0);
    }
    let nf = n as f64;
    let mean = xs.iter().sum::<f64>() / nf;
    if n == 1 {
        return (mean, 0.0);
    }
    let var = xs.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / (nf - 1.0);
    (mean, z * libm::sqrt(var / nf))
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct KsOutcome {
    pub statistic: f64,
    pub p_value: f64,
}

/// Two-sample Kolmogorov-Smirnov test with the asymptotic Kolmogorov
/// distribution and Stephens' small-sample correction.
///
/// Panics if either sample is empty or contains NaN.
pub fn ks_two_sample(a: &[f64], b: &[f64]) -> KsOutcome {
    assert!(!a.is_empty() && !b.is_empty(), "KS test needs non-empty samples");
    let mut xs: Vec<f64> = a.to_vec();
    let mut ys: Vec<f64> = b.to_vec();
    xs.sort_by(|p, q| p.partial_cmp(q).expect("NaN in KS sample"));
    ys.sort_by(|p, q| p.partial_cmp(q).expect("NaN in KS sample"));
    let (n, m) = (xs.len() as f64, ys.len() as f64);
    let (mut i, mut j) = (0usize, 0usize);
    let mut d: f64 = 0.0;
    while i < xs.len() && j < ys.len() {
        let v = xs[i].min(ys[j]);
        while i < xs.len() && xs[i] <= v {
            i += 1;
        }
        while j < ys.len() && ys[j] <= v {
            j += 1;
        }
        d = d.max((i as f64 / n - j as f64 / m).abs());
    }
    let en = libm::sqrt(n * m / (n + m));
    let lambda = (en + 0.12 + 0.11 / en) * d;
    KsOutcome {
        statistic: d,
        p_value: kolmogorov_survival(lambda),
    }
}

/// `Q(λ) = 2 Σ_{j≥1} (−1)^{j−1} e^{−2 j² λ²}`.
pub fn kolmogorov_survival(lambda: f64) -> f64 {
    if lambda < 0.2 {
        return 1.0;
    }
    let a = -2.0 * lambda * lambda;
    let mut sum = 0.0;
    let mut sign = 2.0;
    let mut last = 0.0;
    for j in 1..=100 {
        let jf = j as f64;
        let term = sign * libm::exp(a * jf * jf);
        sum += term;
        if term.abs() <= 1e-12 * last || term.abs() <= 1e-16 * sum.abs() {
            return sum.clamp(0.0, 1.0);
        }
        sign = -sign;
        last = term.abs();
    }
    1.0
}
