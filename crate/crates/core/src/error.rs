use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Malformed or inconsistent arguments.
    #[error("invalid input: {0}")]
    Input(String),

    /// A text file failed to parse.
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    /// An operation's numeric precondition does not hold.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// The eigensolver did not converge within its sweep cap.
    #[error("eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {off_diagonal:e})")]
    NoConvergence { sweeps: usize, off_diagonal: f64 },

    /// The request exceeds a size guard (exhaustive search).
    #[error("capacity exceeded: {0}")]
    Capacity(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn input<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}
