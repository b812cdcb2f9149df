use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("field exponents must be positive (t={t}, m={m})")]
    InvalidFieldShape { t: u32, m: u32 },
    #[error("field too large: only q <= 256 is supported")]
    FieldTooLarge,
    #[error("element index {index} out of range for GF({q})")]
    ElementOutOfRange { index: usize, q: usize },
    #[error("inverse of zero")]
    ZeroInverse,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,
    #[error("polynomial must be monic")]
    NotMonic,
    #[error("x^{s}-1 is not central: automorphism order {m} does not divide {s}")]
    NotCentral { s: usize, m: u32 },
    #[error("enumeration of {required} candidates exceeds the budget of {budget}")]
    BudgetExceeded { required: u128, budget: u128 },
    #[error("invalid code: {0}")]
    InvalidCode(String),
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
