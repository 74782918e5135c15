use thiserror::Error;

/// Crate-wide error type.
///
/// The variants track how a failure should be reported by callers: `Invalid`
/// is a problem with user input, `Degenerate` marks inputs outside the
/// isolated-fixed-point (or otherwise well-posed) regime, `Contract` is an
/// internal precondition violation, and `Undecided` is a semi-decision that
/// ran out of budget.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("internal contract violation: {0}")]
    Contract(String),
    #[error("undecided within budget: {0}")]
    Undecided(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }
    pub fn degenerate(msg: impl Into<String>) -> Self {
        Error::Degenerate(msg.into())
    }
    pub fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }
    pub fn undecided(msg: impl Into<String>) -> Self {
        Error::Undecided(msg.into())
    }
}
