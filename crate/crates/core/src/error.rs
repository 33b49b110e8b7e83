use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed text input. `pos` is a byte offset into the input.
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("expected {expected} components, found {found}")]
    LevelMismatch { expected: usize, found: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("unsupported parameter in {branch}: {detail}")]
    Unsupported {
        branch: &'static str,
        detail: String,
    },

    #[error("precondition of {op} violated: {detail}")]
    Precondition { op: &'static str, detail: String },

    #[error("path planning failed: {0}")]
    Path(String),

    #[error("wall-crossing failed: {0}")]
    WallCrossing(String),

    /// A mathematical invariant that the engine relies on did not hold.
    #[error("invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }

    pub(crate) fn precondition(op: &'static str, detail: impl Into<String>) -> Self {
        Error::Precondition {
            op,
            detail: detail.into(),
        }
    }
}
