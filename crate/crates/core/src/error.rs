use thiserror::Error;

/// Errors raised by the kernel modules.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("invalid rank {n}: must be between 1 and {max}")]
    InvalidRank { n: usize, max: usize },

    #[error("invalid simple-root subset: index {index} out of range 1..={max}")]
    InvalidSubset { index: usize, max: usize },

    #[error("invalid partition: parts sum to {sum}, expected {expected}")]
    InvalidPartition { sum: usize, expected: usize },

    #[error("rank {n} exceeds the capacity bound {max} for strategy `{strategy}`")]
    Capacity {
        n: usize,
        max: usize,
        strategy: &'static str,
    },

    #[error("contract violation: {0}")]
    ContractViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
