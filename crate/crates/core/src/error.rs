use thiserror::Error;

/// Errors produced by the exact-arithmetic core and the sum engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at evaluation point")]
    PoleAtPoint,
    #[error("singular weight")]
    SingularWeight,
    #[error("divergent weight")]
    DivergentWeight,
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("unsupported basis for this operation")]
    UnsupportedBasis,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
