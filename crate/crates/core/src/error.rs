use thiserror::Error;

use crate::partition::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("PadTooSmall: cannot pad {partition} to size {n} (need n >= {required})")]
    PadTooSmall {
        partition: Partition,
        n: usize,
        required: usize,
    },
    #[error("CapExceeded: {what} = {value} exceeds cap {cap}")]
    CapExceeded {
        what: &'static str,
        value: usize,
        cap: usize,
    },
    #[error("SizeMismatch: {0}")]
    SizeMismatch(String),
    #[error("NonIntegralMultiplicity: inner product with {0} is not an integer")]
    NonIntegralMultiplicity(Partition),
    #[error("StabilizationNotReached: no plateau of length {plateau} found for n <= {cap}")]
    StabilizationNotReached { plateau: usize, cap: usize },
    #[error("ArityMismatch: {0}")]
    ArityMismatch(String),
    #[error("IndexOutOfRange: {0}")]
    IndexOutOfRange(String),
    #[error("NotABlockBase: {partition}[{t}] is not a Young diagram")]
    NotABlockBase { partition: Partition, t: usize },
    #[error("PreconditionViolated: {0}")]
    PreconditionViolated(String),
    #[error("ParseError: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
