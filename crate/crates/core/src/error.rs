use thiserror::Error;

/// Errors raised by the library.
///
/// The variants line up with the exit codes used by the command-line front
/// end: input errors (2), cap refusals (3) and internal invariant violations (1).
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed or out-of-range input.
    #[error("input error: {0}")]
    Input(String),

    /// A documented operation precondition does not hold.
    #[error("precondition failed: {0}")]
    Precondition(String),

    /// A work cap would be exceeded; the computation was refused.
    #[error("refused: {what} = {value} exceeds cap {cap} ({cost})")]
    CapExceeded {
        what: &'static str,
        value: usize,
        cap: usize,
        cost: String,
    },

    /// An internal consistency check failed. This indicates a bug.
    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn input<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}
