use thiserror::Error as ThisError;

/// Everything that can go wrong in this crate.
#[derive(Debug, ThisError)]
pub enum Error {
    /// The input does not describe a valid object (bad ids, empty hyperedge, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// The input is valid but the operation's precondition does not hold.
    #[error("precondition failed: {0}")]
    Precondition(String),
    /// An exact search would exceed its size cap.
    #[error("{what} cap exceeded: limit {limit}, got {got}")]
    CapExceeded { what: &'static str, limit: usize, got: usize },
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidInput(msg.into()))
}

pub(crate) fn precondition<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Precondition(msg.into()))
}

pub(crate) fn cap(what: &'static str, limit: usize, got: usize) -> Result<()> {
    if got > limit {
        Err(Error::CapExceeded { what, limit, got })
    } else {
        Ok(())
    }
}
