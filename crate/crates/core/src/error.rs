use alloc::string::String;

/// Errors raised by the core algebra.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("not a surjection onto an initial segment: {0}")]
    NotPacked(String),

    #[error("not a weak quasi-shuffle: {0}")]
    NotWeakQuasiShuffle(String),

    #[error("unknown mould `{0}`")]
    UnknownMould(String),

    #[error("alphabet symbol collision on `{0}`")]
    SymbolCollision(String),

    #[error("invalid bound: {0}")]
    InvalidBound(String),

    #[error("self-check failed: {0}")]
    SelfCheck(String),
}

pub type Result<T> = core::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }
}
