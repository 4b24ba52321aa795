use thiserror::Error;

use crate::Rat;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// A basis element does not have the degree its index requires.
    #[error("degenerate basis: element {index} has degree {degree:?}, expected {index}")]
    DegenerateBasis { index: usize, degree: Option<usize> },

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    /// An integer family produced a non-integral entry.
    #[error("entry ({n},{k}) = {value} is not an integer")]
    NotIntegral { n: usize, k: usize, value: Rat },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("partial Bell polynomial B({n},{k}) needs {needed} arguments, got {got}")]
    InsufficientArguments { n: usize, k: usize, needed: usize, got: usize },

    #[error("enumeration of {total} elements exceeds the size guard of {limit}")]
    SizeGuard { total: usize, limit: usize },

    #[error("series has zero constant term and cannot be inverted")]
    ZeroConstantTerm,

    #[error("explicit formula divisibility failure at ({n},{k})")]
    Divisibility { n: usize, k: usize },

    #[error("unknown family `{0}`")]
    UnknownFamily(String),

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
