use thiserror::Error;

/// Errors raised by the verification library.
///
/// The variants map onto the CLI exit codes: usage errors exit 2, capability
/// errors exit 3, everything else is reported as a failed check.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("usage error: {0}")]
    Usage(String),

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// An internal invariant failed. This always signals a bug.
    #[error("internal consistency error: {0}")]
    Internal(String),

    /// The requested computation exceeds the supported budget.
    #[error("capability error: {0}")]
    Capability(String),

    /// A chain or curve configuration was rejected by a realizability filter.
    #[error("rejected configuration: {0}")]
    Configuration(String),

    #[error("numeric error: {0}")]
    Numeric(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }

    pub fn config(msg: impl Into<String>) -> Self {
        Error::Configuration(msg.into())
    }
}
