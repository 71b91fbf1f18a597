use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    Dimension {
        context: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("size limit exceeded: {found} > {limit}")]
    SizeLimit { limit: usize, found: usize },

    #[error("invalid input: {}", .0.join("; "))]
    Validation(Vec<String>),

    #[error("parse error: {0}")]
    Parse(String),

    /// Reported when a result the theorem guarantees fails to materialize.
    /// Seeing this means the elimination code is wrong.
    #[error("internal invariant broken: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn dim(context: &'static str, expected: usize, found: usize) -> Self {
        Error::Dimension {
            context,
            expected,
            found,
        }
    }

    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::Validation(vec![msg.into()])
    }
}
