use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Malformed or out-of-domain user input.
    #[error("invalid input: {0}")]
    Input(String),

    #[error("{axis} index {index} out of bounds (len {len})")]
    OutOfBounds {
        axis: &'static str,
        index: usize,
        len: usize,
    },

    /// A caller broke an operation's precondition.
    #[error("contract violation: {0}")]
    Contract(String),

    /// An internal invariant of a mining algorithm failed. Always a bug.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }

    pub fn invariant(msg: impl Into<String>) -> Self {
        Error::Invariant(msg.into())
    }
}
