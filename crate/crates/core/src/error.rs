use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An argument violates the operation's precondition.
    InvalidInput(String),
    /// The union of row and column orders of a gridded permutation contains a cycle.
    InconsistentOrders,
    /// An enumeration would exceed its configured budget.
    LimitExceeded { what: &'static str, requested: u128, cap: u128 },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
            Error::InconsistentOrders => f.write_str("row and column orders are inconsistent (their union has a cycle)"),
            Error::LimitExceeded { what, requested, cap } => {
                write!(f, "{what} of {requested} exceeds the configured cap of {cap}")
            }
        }
    }
}

impl core::error::Error for Error {}
