//! Finite-interval quadrature by the tanh-sinh (double exponential) rule.

use alloc::vec::Vec;
use core::f64::consts::FRAC_PI_2;

use crate::error::{argument, Result};
use crate::hermite::{QuadratureKind, QuadratureRule};

/// Step used by [`integrate`]: `2^-6`.
pub const DEFAULT_LEVEL: u32 = 6;

/// Tanh-sinh rule on `[a, b]` with step `2^-level`.
///
/// Nodes are generated from the distance to the nearer endpoint so that
/// clustering near `a` and `b` keeps full relative precision. Nodes that
/// round onto an endpoint are dropped.
pub fn tanh_sinh_rule(a: f64, b: f64, level: u32) -> Result<QuadratureRule> {
    if !(a.is_finite() && b.is_finite()) || a >= b {
        return Err(argument(alloc::format!("tanh-sinh needs a finite interval a < b, got [{a}, {b}]")));
    }
    let h = libm::ldexp(1.0, -(level as i32));
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    let k_max = (4.0 / h) as i64;
    let mut nodes = Vec::with_capacity(2 * k_max as usize + 1);
    let mut weights = Vec::with_capacity(2 * k_max as usize + 1);
    for k in -k_max..=k_max {
        let s = k as f64 * h;
        let u = FRAC_PI_2 * libm::sinh(s);
        let cu = libm::cosh(u);
        let w = half * h * FRAC_PI_2 * libm::cosh(s) / (cu * cu);
        // 1 - tanh|u| = 2 / (e^{2|u|} + 1)
        let gap = (b - a) / (libm::exp(2.0 * u.abs()) + 1.0);
        let x = match k {
            0 => mid,
            k if k > 0 => b - gap,
            _ => a + gap,
        };
        if x <= a || x >= b || w == 0.0 {
            continue;
        }
        nodes.push(x);
        weights.push(w);
    }
    Ok(QuadratureRule::from_parts(nodes, weights, QuadratureKind::TanhSinh { a, b }))
}

/// `∫_a^b f(t) dt`, splitting the interval at every breakpoint inside it.
/// Returns `0` for an empty interval.
pub fn integrate_piecewise(f: impl Fn(f64) -> f64, a: f64, b: f64, breakpoints: &[f64]) -> Result<f64> {
    if a == b {
        return Ok(0.0);
    }
    if a > b {
        return integrate_piecewise(f, b, a, breakpoints).map(|v| -v);
    }
    let mut cuts: Vec<f64> = breakpoints.iter().copied().filter(|&c| c > a && c < b).collect();
    cuts.sort_by(f64::total_cmp);
    cuts.dedup();
    let mut total = 0.0;
    let mut lo = a;
    for hi in cuts.into_iter().chain(core::iter::once(b)) {
        total += tanh_sinh_rule(lo, hi, DEFAULT_LEVEL)?.integrate(&f);
        lo = hi;
    }
    Ok(total)
}

/// `∫_a^b f(t) dt` with the default rule.
pub fn integrate(f: impl Fn(f64) -> f64, a: f64, b: f64) -> Result<f64> {
    integrate_piecewise(f, a, b, &[])
}
