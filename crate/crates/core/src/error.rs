use alloc::string::String;

/// Errors raised by the exact computations in this crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("conductor {conductor} exceeds the configured cap {cap}")]
    ConductorCap { conductor: u64, cap: u64 },
    #[error("singular matrix")]
    SingularMatrix,
    #[error("zero form or field: {0}")]
    ZeroInput(&'static str),
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
    #[error("input is not homogeneous: {0}")]
    NotHomogeneous(&'static str),
    #[error("coefficients share a common factor")]
    CommonFactor,
    #[error("no solution: {0}")]
    NoSolution(String),
    #[error("group closure exceeded {max_order} elements")]
    ExceedsMaxOrder { max_order: usize },
    #[error("series coefficient at degree {degree} is not a non-negative integer: {value}")]
    NonIntegerCoefficient { degree: usize, value: String },
    #[error("dimension mismatch at degree {degree}: computed {computed}, Molien series predicts {expected}")]
    DimensionMismatch { degree: usize, computed: usize, expected: usize },
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = core::result::Result<T, Error>;
