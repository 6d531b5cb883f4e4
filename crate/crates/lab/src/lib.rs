//! Experiments, report files and parallel execution on top of `rfh-core`.
//!
//! - [`exec`]: rayon-backed executor whose output matches the sequential one.
//! - [`report`]: CSV/JSON tables with a config echo header.
//! - [`cli`]: the `rfh` command line.

pub mod cli;
pub mod exec;
pub mod report;

pub use cli::run;
