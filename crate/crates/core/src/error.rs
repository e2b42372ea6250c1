use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid scalar literal `{0}`")]
    InvalidScalar(String),

    #[error("line {line}: {message}")]
    Format { line: usize, message: String },

    #[error("syntax error at column {column}: {message}")]
    Syntax { column: usize, message: String },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("inconsistent multidegree: {0}")]
    InconsistentMultidegree(String),

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("not multilinear: {0}")]
    NotMultilinear(String),

    #[error("not an ideal: {0}")]
    NotAnIdeal(String),

    #[error("not closed under multiplication: {0}")]
    NotASubalgebra(String),

    #[error("basis size {count} exceeds the cap of {cap} words")]
    CapExceeded { count: usize, cap: usize },

    #[error("invalid word `{0}`")]
    InvalidWord(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
