use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("subspace not contained in the ambient subspace")]
    NotContained,
    #[error("algebra is not associative")]
    NotAssociative,
    #[error("subspace is not a two-sided ideal")]
    NotAnIdeal,
    #[error("variety mismatch: {0}")]
    VarietyMismatch(String),
    #[error("action axioms fail: {0}")]
    ActionAxiomsFail(String),
    #[error("guard exceeded: {0}")]
    GuardExceeded(String),
    #[error("field mismatch: {0}")]
    FieldMismatch(String),
    #[error("sequence not exact: {0}")]
    NotExact(String),
    #[error("degree range too small: {0}")]
    RangeTooSmall(String),
    #[error("degree {0} exceeds the cap {1}")]
    DegreeCap(usize, usize),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
}

pub type Result<T> = std::result::Result<T, Error>;
