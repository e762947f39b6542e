use std::io;

use thiserror::Error;

/// Errors produced while loading data or validating mining input.
#[derive(Debug, Error)]
pub enum Error {
    /// A text input line could not be parsed. Line numbers are 1-based.
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("distance requires a < b (got a = {a}, b = {b})")]
    DistanceOrder { a: usize, b: usize },

    #[error("invalid parameter: {0}")]
    InvalidParam(String),

    #[error("item universe has {size} items, brute-force enumeration is limited to {limit}")]
    UniverseTooLarge { size: usize, limit: usize },

    #[error("event #{index} (timestamp {timestamp}, item {item}) precedes the window start {start}")]
    EventBeforeStart {
        index: usize,
        timestamp: u64,
        item: u32,
        start: u64,
    },

    #[error(transparent)]
    Io(#[from] io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    pub(crate) fn param(message: impl Into<String>) -> Self {
        Error::InvalidParam(message.into())
    }
}
