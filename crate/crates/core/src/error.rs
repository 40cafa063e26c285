use thiserror::Error;

/// Errors raised by the algebra engine and the verification layers built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("operands belong to different algebra contexts")]
    ContextMismatch,

    #[error("adjoint action unavailable at t=0")]
    AdjointUnavailable,

    #[error("degree cap exceeded: intermediate degree {requested} > cap {cap}")]
    DegreeCap { cap: usize, requested: usize },

    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),

    #[error("index out of range: {0}")]
    OutOfRange(String),

    #[error("pole at coincident eigenvalues")]
    CoincidentEigenvalues,

    #[error("non-regular parameters: {0}")]
    NonRegular(String),

    #[error("not scalar on v0: {0}")]
    NotScalarOnHwv(String),

    #[error("not central: {0}")]
    NotCentral(String),

    #[error("linear system has no solution")]
    NoSolution,

    #[error("linear system has a non-unique solution (rank {rank} < {unknowns})")]
    NonUniqueSolution { rank: usize, unknowns: usize },

    #[error("condition not satisfied: {0}")]
    ConditionFailed(String),

    #[error("verification failed: {0}")]
    VerificationFailed(String),
}

impl Error {
    /// True for errors caused by bad input rather than by the mathematics.
    pub fn is_usage(&self) -> bool {
        matches!(self, Error::Parse(_) | Error::InvalidParams(_) | Error::OutOfRange(_))
    }

    /// True for errors raised by a size guard.
    pub fn is_resource(&self) -> bool {
        matches!(self, Error::DegreeCap { .. } | Error::ResourceCap(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
