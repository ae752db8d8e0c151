use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid rational literal {0:?} (expected p, p/q)")]
    ParseRational(String),
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid domain: {0}")]
    InvalidDomain(String),
    #[error("anti-norm requires strictly positive entries, got {0:?}")]
    NonPositiveEntry(Vec<u64>),
    #[error("capacity index must be at least 1, got {0}")]
    InvalidIndex(u64),
    #[error("scale factor must be positive, got {0}")]
    NonPositiveScale(String),
    #[error("domain is unbounded: {0}")]
    Unbounded(String),
    #[error("operation not supported for {0}")]
    Unsupported(String),
    #[error("capacity sequence has length {have}, need {need}")]
    SequenceTooShort { have: usize, need: usize },
    #[error("enumeration of {count} compositions exceeds cap {cap}")]
    EnumerationCap { count: String, cap: u64 },
    #[error("capacity sequence decreases at k={0}")]
    NotMonotone(u64),
}
