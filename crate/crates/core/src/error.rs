use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A caller passed an argument outside an operation's domain.
    #[error("invalid argument: {0}")]
    Argument(String),

    /// A geometric or combinatorial precondition does not hold
    /// (non-generic direction, invalid embedding, ...).
    #[error("precondition failed: {0}")]
    Precondition(String),

    /// A bounded retry or recursion budget ran out.
    #[error("internal: {0}")]
    Internal(String),

    /// An invariant that the mathematics guarantees was violated.
    /// This always indicates a bug in the pipeline, never bad input.
    #[error("invariant violation: {0}")]
    InvariantViolation(String),

    /// Malformed serialized data.
    #[error("format: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn arg<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Argument(msg.into()))
}
