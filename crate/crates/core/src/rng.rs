//! Counter-based seed derivation.
//!
//! Trial `k` of an experiment seeded with `s` always draws from the stream
//! seeded by [`derive_seed`]`(s, k)`, so results never depend on how trials
//! are scheduled across workers.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Random stream used for every path and sampler in the crate.
pub type TrialRng = ChaCha8Rng;

const GOLDEN: u64 = 0x9E37_79B9_7F4A_7C15;

#[inline]
fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Sub-seed for stream `index` of the experiment seeded with `master`.
#[inline]
pub fn derive_seed(master: u64, index: u64) -> u64 {
    mix64(mix64(master.wrapping_add(GOLDEN)) ^ index.wrapping_mul(GOLDEN).wrapping_add(GOLDEN))
}

pub fn rng_from_seed(seed: u64) -> TrialRng {
    TrialRng::seed_from_u64(seed)
}

/// Uniform variate in `[0, 1)` addressed by `(seed, index)`.
#[inline]
pub fn counter_uniform(seed: u64, index: u64) -> f64 {
    (mix64(derive_seed(seed, index)) >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}
