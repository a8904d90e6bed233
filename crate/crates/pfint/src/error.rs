//! Error type shared across the crate.

use thiserror::Error;

/// Errors raised by matrix algebra, series arithmetic and the verification
/// drivers.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("matrix is not antisymmetric at entry ({row}, {col})")]
    NotSkew { row: usize, col: usize },

    #[error("dimension {dim} exceeds the combinatorial size limit {max}")]
    SizeLimit { dim: usize, max: usize },

    #[error(
        "tuple sum needs {required} Pfaffian evaluations (cap {cap}); \
         use the trace-side formula instead"
    )]
    WorkGuard { required: u128, cap: u128 },

    #[error("index {index} out of range for dimension {dim} (indices are 1-based)")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("power sum p_{index} is missing (only {available} supplied)")]
    MissingPowerSum { index: usize, available: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("series operation requires {0}")]
    Series(String),

    #[error("parse error: {0}")]
    Parse(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
