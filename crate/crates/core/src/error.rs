use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// An argument lies outside the domain of the operation (zero root,
    /// dimension mismatch, non-root input, ...).
    #[error("domain error: {0}")]
    Domain(String),
    /// Unsupported root system label or rank.
    #[error("configuration error: {0}")]
    Config(String),
    /// A configured resource cap was exceeded.
    #[error("resource error: {0}")]
    Resource(String),
    /// Malformed textual input.
    #[error("parse error: {0}")]
    Parse(String),
    /// An operation was called without its documented precondition.
    #[error("precondition failed: {0}")]
    Precondition(String),
    /// Internal data disagreed with itself; signals a bug.
    #[error("internal consistency error: {0}")]
    Consistency(String),
    /// A mathematical identity that must hold did not.
    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
