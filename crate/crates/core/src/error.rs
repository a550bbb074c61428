use thiserror::Error;

/// Errors produced by the library. Resource exhaustion is a distinct
/// variant so callers (and the CLI exit-code contract) can tell a cap
/// violation from a genuine usage error.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid root system: {family}{rank}")]
    InvalidSystem { family: String, rank: usize },

    #[error("ambient dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("not a root of the system: {0}")]
    NotARoot(String),

    #[error("weight is not dominant: {0}")]
    NotDominant(String),

    #[error("weight is not integral: {0}")]
    NotIntegral(String),

    #[error("weight is singular: {0}")]
    Singular(String),

    #[error("resource cap exceeded while {what} (cap {cap})")]
    ResourceCap { what: String, cap: u64 },

    #[error("invalid pair: {0}")]
    InvalidPair(String),

    #[error("registry error: {0}")]
    Registry(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
