use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("invalid code {0:?}: {1}")]
    InvalidCode(Vec<usize>, String),

    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("the zero polynomial has no leading monomial")]
    ZeroPolynomial,

    #[error("quotient ring is infinite-dimensional")]
    InfiniteQuotient,

    #[error("ideal is not homogeneous")]
    NotHomogeneous,

    #[error("duplicate point {0:?}")]
    DuplicatePoint(Vec<String>),

    #[error("ideal is not stable under the symmetric group")]
    NotStable,

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn params(msg: impl Into<String>) -> Self {
        Error::InvalidParameters(msg.into())
    }
}
