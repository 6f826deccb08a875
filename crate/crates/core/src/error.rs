use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{value} is not a unit modulo {modulus}")]
    NotAUnit { value: String, modulus: String },
    #[error("group order exceeds the cap of {cap} elements")]
    GroupTooLarge { cap: usize },
    #[error("no split prime found among {cap} primes from {start}")]
    NoSplitPrimeFound { start: String, cap: String },
    #[error("bad prime {p}: {reason}")]
    BadPrime { p: String, reason: String },
    #[error("precision p^{have} is below the required p^{needed}")]
    InsufficientPrecision { needed: u32, have: u32 },
    #[error("reconstruction failed at index {index}: {reason}")]
    InconsistentLabeling { index: usize, reason: String },
    #[error("no root labeling is consistent with the group action")]
    ActionMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid basis: {0}")]
    InvalidBasis(String),
    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}
