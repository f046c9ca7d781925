use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("context mismatch: {0}")]
    ContextMismatch(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("duplicate generator name `{0}`")]
    DuplicateGenerator(String),

    #[error("too many generators ({0}); at most 32 are supported")]
    TooManyGenerators(usize),

    #[error("generator subset is not contained in the context: {0}")]
    NotSubset(String),

    #[error("unrecognized model shape: {0}")]
    UnrecognizedShape(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invariant violated at step `{step}`: {detail}")]
    InvariantViolation { step: String, detail: String },

    #[error("expected an integer, found {0}")]
    NonIntegral(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn invariant(step: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::InvariantViolation {
            step: step.into(),
            detail: detail.into(),
        }
    }

    pub(crate) fn pre(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
