use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An input violated an operation's precondition (disconnected graph, bad length, ...).
    Precondition(String),
    /// The requested computation would exceed the configured budget.
    Budget {
        what: &'static str,
        required: u128,
        limit: u128,
    },
    /// A mathematical guarantee failed to hold. Always a bug in this crate.
    Invariant(String),
    /// A class function had non-integral multiplicities, so it is not a character.
    NotACharacter(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Precondition(msg) => write!(f, "precondition violated: {msg}"),
            Error::Budget {
                what,
                required,
                limit,
            } => write!(f, "budget exceeded for {what}: need {required}, limit {limit}"),
            Error::Invariant(msg) => write!(f, "internal invariant violated: {msg}"),
            Error::NotACharacter(msg) => write!(f, "not a character: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

pub(crate) fn precondition(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}

pub(crate) fn invariant(msg: impl Into<String>) -> Error {
    Error::Invariant(msg.into())
}
