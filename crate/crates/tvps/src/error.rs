//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("no prime at or below {0}")]
    NoPrime(u64),

    #[error("enumeration refused: {0}")]
    EnumerationRefused(String),

    /// The prime-chain construction cannot reach the requested cycle length
    /// within the given strength budget.
    #[error("chain capacity insufficient for n={n} at budget {budget}; minimal feasible budget is {minimal}")]
    ChainCapacity { n: usize, budget: u64, minimal: u64 },

    /// No strength budget makes the prime-chain construction feasible.
    #[error("prime-chain construction infeasible for n={0}")]
    ChainInfeasible(usize),

    /// Composition requires every label to be 1 or a prime.
    #[error("unsupported labeling: composite label {0}")]
    UnsupportedLabeling(u64),

    #[error("prime pool too small: need {need}, have {have}")]
    PoolTooSmall { need: usize, have: usize },

    #[error("factor prime supports overlap on {0}")]
    OverlappingSupports(u64),

    #[error("invalid witness: {0}")]
    InvalidWitness(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("internal error: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
