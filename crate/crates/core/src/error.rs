use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("degree {degree} exceeds cap {cap}")]
    DegreeCap { degree: usize, cap: usize },
    #[error("invalid number field modulus: {0}")]
    InvalidModulus(String),
    #[error("scalars from different number fields")]
    FieldMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("certificate failed verification: {0}")]
    CertificateFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
