use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or out-of-range input.
    #[error("input error: {0}")]
    Input(String),
    /// A configured size cap was exceeded.
    #[error("resource cap exceeded: {what} = {value} > {cap}")]
    Cap {
        what: &'static str,
        value: usize,
        cap: usize,
    },
    /// An operation was called on an object that does not meet its precondition.
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("graph undefined for mixed degrees")]
    MixedDegrees,
    #[error("generation failed: {0}")]
    Generation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
