use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("injectivity violation: {0}")]
    InjectivityViolation(String),

    #[error("non-positive value: {0}")]
    NonPositiveValue(String),

    /// A listed pair sits inside the shift tail but disagrees with it, or a
    /// key is listed twice with different images.
    #[error("not a function: {0}")]
    NotAFunction(String),

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("element is not an idempotent: {0}")]
    NotIdempotent(String),

    #[error("element is not a unit: {0}")]
    NotAUnit(String),

    #[error("element is not in the H-class of {0}")]
    NotInHClass(String),

    #[error("not a finitely supported permutation: {0}")]
    NotAPermutation(String),

    #[error("fixed set is not contained in the domain: {0}")]
    FixedSetOutsideDomain(String),

    #[error("neighbourhood kinds differ")]
    KindMismatch,

    #[error("elements are equal; nothing to separate")]
    EqualElements,
}

impl Error {
    pub(crate) fn parse(offset: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: message.into(),
        }
    }

    /// Shifts the reported offset of a parse error, leaving other errors alone.
    pub fn offset_by(self, delta: usize) -> Self {
        match self {
            Error::Parse { offset, message } => Error::Parse {
                offset: offset + delta,
                message,
            },
            other => other,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
