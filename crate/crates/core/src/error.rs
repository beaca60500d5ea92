use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("the zero polynomial has no degree")]
    ZeroPolynomial,
    #[error("series known through t^{available}, but t^{requested} was requested")]
    InsufficientPrecision { requested: usize, available: usize },
    #[error("series must have zero constant term")]
    NonzeroConstantTerm,
    #[error("genus must be at least {min}, got {genus}")]
    InvalidGenus { genus: u32, min: u32 },
    #[error("expected weighted degree {expected}, got {found}")]
    WrongWeightedDegree { expected: u32, found: String },
    #[error("quotient ring is not finite dimensional (no pure power of {0} in the initial ideal)")]
    InfiniteQuotient(&'static str),
    #[error("parse error at position {position}: expected {expected}")]
    Parse { position: usize, expected: String },
}
