//! Random Fourier-Hermite series and transforms driven by symmetric
//! α-stable processes, together with the Monte Carlo machinery used to
//! check their convergence numerically.
//!
//! The crate is `no_std` and only needs `alloc`. Everything that touches
//! files, threads or the command line lives in the `rfh-lab` companion.
//!
//! Module map:
//!
//! - [`hermite`]: Hermite polynomials, Hermite-Gaussian functions and
//!   Gauss-Hermite quadrature.
//! - [`stable`]: symmetric α-stable variates and process paths.
//! - [`integral`]: stochastic integrals of deterministic integrands, exact
//!   distribution oracles and the numeric moment/tail bounds.
//! - [`rfh`]: Fourier-Hermite coefficients, random coefficients, partial
//!   sums of the random series and the randomized-eigenvalue transform.
//! - [`verify`]: estimators of convergence in mean / in probability and the
//!   experiment drivers.
#![no_std]
// `!(x > 0.0)` is used on purpose so NaN is rejected along with non-positive values.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

pub mod error;
pub mod hermite;
pub mod integral;
pub mod quad;
pub mod rfh;
pub mod rng;
pub mod stable;
pub mod stats;
pub mod verify;

pub use error::{Error, Result};
pub use num_complex::Complex64;
