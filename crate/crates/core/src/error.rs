use thiserror::Error;

/// Errors raised by the library.
///
/// Variants are split into input problems (bad literals, violated
/// preconditions) and computational-bound problems (a search or an
/// enumeration ran past its configured limit). The CLI maps the first group
/// to exit code 2 and the second to exit code 3.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("zero divisor")]
    ZeroDivisor,
    #[error("character undefined at zero")]
    CharacterAtZero,
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("not a unit at place")]
    NotAUnit,
    #[error("symbol undefined: odd valuation")]
    OddValuation,
    #[error("zero function")]
    ZeroFunction,
    #[error("point classes are dependent in Pic/2Pic")]
    DependentPoints,
    #[error("no odd-valuation class exists: {0} is not an even point")]
    NotEven(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("search bound exhausted: {0}")]
    BoundExhausted(String),
    #[error("enumeration cap exceeded: {0}")]
    CapExceeded(String),
    #[error("verification failed: {0}")]
    Verification(String),
}

impl Error {
    /// True for errors caused by hitting a configured search or size limit.
    pub fn is_bound_error(&self) -> bool {
        matches!(
            self,
            Error::BoundExhausted(_) | Error::CapExceeded(_) | Error::Verification(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
