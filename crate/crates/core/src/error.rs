use thiserror::Error;

/// Errors raised by the algebra engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("coefficients belong to different fields ({left} vs {right})")]
    FieldMismatch { left: String, right: String },

    #[error("attempted to invert zero")]
    ZeroInverse,

    #[error("modulus {0} is not prime")]
    NotPrime(u64),

    #[error("alphabet mismatch: {0}")]
    AlphabetMismatch(String),

    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),

    #[error("pattern must be a nonempty word")]
    EmptyPattern,

    #[error("reduction system is not compatible with the ordering ({violations} violation(s))")]
    Incompatible { violations: usize },

    #[error("reduction system is invalid: {0}")]
    InvalidSystem(String),

    #[error("reduction system is not confluent ({unresolvable} unresolvable ambiguit(y/ies))")]
    NotConfluent { unresolvable: usize },

    #[error("search budget of {budget} states exhausted")]
    BudgetExhausted { budget: usize },

    #[error("input polynomial is reducible; ring operations take normal forms")]
    ReducibleInput,

    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// A syntax error in a text input, with 1-based position.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }
}
