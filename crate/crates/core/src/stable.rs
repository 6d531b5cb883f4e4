//! Symmetric α-stable laws and process paths, α ∈ (1, 2].
//!
//! The scale convention is `E[e^{iuZ}] = exp(−σ^α |u|^α)`. Increments of
//! the process over a step of length `Δt` therefore have scale `Δt^{1/α}`,
//! and at α = 2 the process is a Brownian motion with variance `2t`, not `t`.

use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::f64::consts::{FRAC_PI_2, PI, SQRT_2};

use rand::Rng;
use rand_distr::{Distribution, Exp1, StandardNormal};

use crate::error::{argument, Result};
use crate::rng::rng_from_seed;

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct StableLaw {
    alpha: f64,
    scale: f64,
}

/// Rejects α outside (1, 2].
pub fn check_alpha(alpha: f64) -> Result<()> {
    if alpha > 1.0 && alpha <= 2.0 {
        Ok(())
    } else {
        Err(argument(format!("stability index must lie in (1, 2], got {alpha}")))
    }
}

impl StableLaw {
    pub fn new(alpha: f64, scale: f64) -> Result<Self> {
        check_alpha(alpha)?;
        if !(scale >= 0.0 && scale.is_finite()) {
            return Err(argument(format!("scale must be finite and non-negative, got {scale}")));
        }
        Ok(Self { alpha, scale })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn scale(&self) -> f64 {
        self.scale
    }

    /// `exp(−σ^α |u|^α)`.
    pub fn characteristic_function(&self, u: f64) -> f64 {
        libm::exp(-libm::pow(self.scale * u.abs(), self.alpha))
    }

    /// `E|Z| = 2σ Γ(1 − 1/α) / π`.
    pub fn mean_abs(&self) -> f64 {
        2.0 * self.scale * libm::tgamma(1.0 - 1.0 / self.alpha) / PI
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        sample_stable(self, rng)
    }
}

/// One draw from `law`.
///
/// α = 2 is sampled as a Gaussian with standard deviation `σ√2`; α < 2 uses
/// the Chambers-Mallows-Stuck construction for β = 0:
///
/// ```text
/// V ~ U(−π/2, π/2), W ~ Exp(1)
/// Z = sin(αV) / cos(V)^{1/α} · (cos((1−α)V) / W)^{(1−α)/α}
/// ```
pub fn sample_stable<R: Rng + ?Sized>(law: &StableLaw, rng: &mut R) -> f64 {
    if law.scale == 0.0 {
        return 0.0;
    }
    if law.alpha == 2.0 {
        let z: f64 = StandardNormal.sample(rng);
        return law.scale * SQRT_2 * z;
    }
    law.scale * standard_symmetric_cms(law.alpha, rng)
}

#[inline]
fn standard_symmetric_cms<R: Rng + ?Sized>(alpha: f64, rng: &mut R) -> f64 {
    let v = PI * (rng.random::<f64>() - 0.5);
    let w: f64 = Exp1.sample(rng);
    let cos_v = libm::cos(v);
    let lead = libm::sin(alpha * v) / libm::pow(cos_v, 1.0 / alpha);
    let tail = libm::pow(libm::cos((1.0 - alpha) * v) / w, (1.0 - alpha) / alpha);
    let z = lead * tail;
    // V at ±π/2 exactly is a measure-zero event that can produce 0·∞.
    if z.is_finite() {
        z
    } else if v.abs() >= FRAC_PI_2 {
        0.0
    } else {
        z
    }
}

/// Grid from `−half_width` to `half_width` with spacing `step`; the last step
/// may be shorter so both endpoints are exact.
pub fn uniform_grid(half_width: f64, step: f64) -> Result<Vec<f64>> {
    if !(half_width > 0.0 && half_width.is_finite()) || !(step > 0.0 && step <= half_width) {
        return Err(argument(format!(
            "uniform grid needs T > 0 and 0 < h <= T, got T = {half_width}, h = {step}"
        )));
    }
    let span = 2.0 * half_width;
    let tol = step * 1e-9;
    let count = libm::floor(span / step + 1e-9) as usize;
    let mut grid = Vec::with_capacity(count + 2);
    let mut i = 0usize;
    loop {
        let t = -half_width + i as f64 * step;
        if t >= half_width - tol {
            break;
        }
        grid.push(t);
        i += 1;
    }
    grid.push(half_width);
    Ok(grid)
}

/// One realization `ω` of the process, stored as increments on a grid.
#[derive(Debug, Clone, PartialEq)]
pub struct SamplePath {
    grid: Arc<[f64]>,
    increments: Vec<f64>,
    alpha: f64,
    seed: u64,
}

impl SamplePath {
    pub fn grid(&self) -> &[f64] {
        &self.grid
    }

    pub fn shared_grid(&self) -> Arc<[f64]> {
        Arc::clone(&self.grid)
    }

    pub fn increments(&self) -> &[f64] {
        &self.increments
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn len(&self) -> usize {
        self.increments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.increments.is_empty()
    }

    /// `X(t_k) − X(t_0)` for every grid point.
    pub fn values(&self) -> Vec<f64> {
        let mut out = Vec::with_capacity(self.grid.len());
        let mut acc = 0.0;
        out.push(acc);
        for d in &self.increments {
            acc += d;
            out.push(acc);
        }
        out
    }

    /// `(t_0, t_M)`.
    pub fn span(&self) -> (f64, f64) {
        (self.grid[0], self.grid[self.grid.len() - 1])
    }
}

/// Simulates independent increments `X(t_{i+1}) − X(t_i) ~ S_α((Δt_i)^{1/α})`
/// from the stream seeded by `seed`.
pub fn simulate_path(grid: impl Into<Arc<[f64]>>, alpha: f64, seed: u64) -> Result<SamplePath> {
    let grid: Arc<[f64]> = grid.into();
    check_alpha(alpha)?;
    if grid.len() < 2 {
        return Err(argument("a path grid needs at least two points"));
    }
    if grid.windows(2).any(|w| !(w[1] > w[0])) || grid.iter().any(|t| !t.is_finite()) {
        return Err(argument("path grid must be finite and strictly increasing"));
    }
    let mut rng = rng_from_seed(seed);
    let gaussian = alpha == 2.0;
    let increments = grid
        .windows(2)
        .map(|w| {
            let dt = w[1] - w[0];
            if gaussian {
                let z: f64 = StandardNormal.sample(&mut rng);
                libm::sqrt(2.0 * dt) * z
            } else {
                libm::pow(dt, 1.0 / alpha) * standard_symmetric_cms(alpha, &mut rng)
            }
        })
        .collect();
    Ok(SamplePath {
        grid,
        increments,
        alpha,
        seed,
    })
}
