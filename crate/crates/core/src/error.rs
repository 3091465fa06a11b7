use thiserror::Error;

/// Errors produced by the algebra kernels, the parser and the decision procedures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("division by non-unit: {0}")]
    DivisionByNonUnit(String),
    #[error("polynomial is not monic in `{0}`")]
    NotMonic(String),
    #[error("zero input: {0}")]
    ZeroInput(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("field too small: {0}")]
    TinyField(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("quotient has infinite length: {0}")]
    InfiniteLength(String),
    #[error("malformed polar shape: {0}")]
    MalformedPolarShape(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
