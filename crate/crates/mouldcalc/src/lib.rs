//! Command-line front end for `mouldcalc-core`: text and JSON formats, an
//! expression evaluator, mould specifications and the verification suites.

pub mod expr;
pub mod json;
pub mod report;
pub mod specs;
pub mod suites;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Core(#[from] mouldcalc_core::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn usage<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Usage(msg.into()))
}
