use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(usize),

    #[error("modulus {p} exceeds the configured bound {max}")]
    ModulusTooLarge { p: usize, max: usize },

    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(usize, usize),

    #[error("division by zero")]
    DivisionByZero,

    #[error("value does not fit in double precision")]
    Overflow,

    #[error("invalid input: {0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    /// An outcome the underlying theorems rule out. Reaching this means the
    /// implementation is wrong.
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
}

/// Coarse classification used for exit codes and report statuses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Precondition,
    BudgetExceeded,
    TheoremViolation,
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::BudgetExceeded(_) => ErrorKind::BudgetExceeded,
            Error::TheoremViolation(_) => ErrorKind::TheoremViolation,
            _ => ErrorKind::Precondition,
        }
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn violation(msg: impl Into<String>) -> Self {
        Error::TheoremViolation(msg.into())
    }
}
