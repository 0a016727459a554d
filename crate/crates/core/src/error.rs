use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("non-finite coordinate in point ({0}, {1}, {2})")]
    NonFinitePoint(f64, f64, f64),

    #[error("dilation factor must be positive, got {0}")]
    NonPositiveDilation(f64),

    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("point {0:?} is the identity; r_p = 0")]
    ZeroPoint([f64; 3]),

    #[error("no bracket for the membership predicate within 2^60 scaling")]
    NoBracket,

    #[error("degenerate axis: projection of the point is (0, 0)")]
    DegenerateAxis,

    #[error("region cannot be sampled: {0}")]
    EmptyRegion(String),

    #[error("family mixes distance models")]
    MixedModels,

    #[error("family is empty")]
    EmptyFamily,

    #[error("invalid Besicovitch family: {0}")]
    InvalidFamily(String),

    #[error("family is not reduced: {0}")]
    NotReduced(String),

    #[error("threshold sweep exhausted without a passing configuration: {trace}")]
    SweepExhausted { trace: String },

    #[error("construction failed at step {step}: {reason}")]
    Construction { step: usize, reason: String },

    #[error("invalid base metric: {0}")]
    InvalidBaseMetric(String),

    #[error("sequence too shallow: no admissible element for k = {k} (depth {depth})")]
    InsufficientDepth { k: usize, depth: usize },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(name: &'static str, reason: impl Into<String>) -> Error {
    Error::InvalidParameter {
        name,
        reason: reason.into(),
    }
}
