use alloc::boxed::Box;
use alloc::string::String;

/// Errors raised across the crate.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("order {order} exceeds basis capacity {max_order}")]
    Capacity { order: usize, max_order: usize },
    #[error("order {requested} out of range for expansion of order {order}")]
    Range { requested: usize, order: usize },
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error("non-finite value {value} at t = {at}")]
    Evaluation { at: f64, value: f64 },
    #[error("path covers [{lo}, {hi}] but must reach at least ±{required}")]
    InsufficientSpan { required: f64, lo: f64, hi: f64 },
    #[error("trial with sub-seed {seed} failed: {source}")]
    Trial { seed: u64, source: Box<Error> },
}

pub type Result<T> = core::result::Result<T, Error>;

pub(crate) fn argument(msg: impl Into<String>) -> Error {
    Error::Argument(msg.into())
}
