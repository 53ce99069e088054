use thiserror::Error;

/// Errors surfaced by the library. Configuration mismatches (different
/// modulus or variable count) are programming errors on the caller side and
/// are reported rather than silently coerced.
#[derive(Debug, Error)]
pub enum Error {
    #[error("configuration mismatch: {0}")]
    ConfigMismatch(String),
    #[error("width mismatch: expected {expected}, got {got}")]
    WidthMismatch { expected: usize, got: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("module has torsion")]
    TorsionInput,
    #[error("tuple length {0} exceeds the rank bound {1}")]
    DimensionExceeded(usize, usize),
    #[error("coefficient of y{0} is not divisible by the chosen divisor")]
    NonDivisor(usize),
    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
