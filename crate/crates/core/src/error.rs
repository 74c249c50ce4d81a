use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, SaxError>;

#[derive(Debug, Error)]
pub enum SaxError {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("series length {n} is not divisible by word length {m}")]
    Divisibility { n: usize, m: usize },

    #[error("{}: line {line}: {message}", path.display())]
    Format {
        path: PathBuf,
        line: usize,
        message: String,
    },

    #[error("i/o error on {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("report serialization failed: {0}")]
    Report(String),
}

impl SaxError {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        SaxError::InvalidInput(msg.into())
    }

    pub(crate) fn param(msg: impl Into<String>) -> Self {
        SaxError::InvalidParameter(msg.into())
    }
}
