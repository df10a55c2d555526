use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid ring spec: {0}")]
    InvalidRing(String),
    #[error("invalid module spec: {0}")]
    InvalidModule(String),
    #[error("element or ideal does not belong to ring {0}")]
    MismatchedRing(String),
    #[error("element does not belong to the module: {0}")]
    ForeignElement(String),
    #[error("module has {order} elements, enumeration bound is {bound}")]
    ResourceBound { order: usize, bound: usize },
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("separation failed: {0}")]
    Separation(String),
    #[error("submodule is not prime")]
    NotPrime,
    #[error("scalar restriction must be taken at Ann(M) = {expected}, got {got}")]
    WrongQuotient { expected: String, got: String },
    #[error("non-proper input: {0}")]
    NotProper(String),
    #[error("parse error at {line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid corpus parameters: {0}")]
    Corpus(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
