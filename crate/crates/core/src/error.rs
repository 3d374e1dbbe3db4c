use thiserror::Error;

use crate::pmcore::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("element {element} out of range for ground set of size {n}")]
    OutOfRange { element: usize, n: usize },

    #[error("operation requires a matroid (every singleton rank must be 0 or 1)")]
    NotMatroid,

    #[error("{what} cap exceeded: {got} > {limit}")]
    CapExceeded {
        what: &'static str,
        limit: usize,
        got: usize,
    },

    #[error("basis mismatch: expected {expected}, found {found}")]
    BasisMismatch {
        expected: &'static str,
        found: &'static str,
    },

    #[error("invalid word {word:?}: {reason}")]
    InvalidWord { word: Vec<u64>, reason: &'static str },

    #[error("polymatroid axiom violated: {0}")]
    Invalid(Violation),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown {kind} `{name}`")]
    Unknown { kind: &'static str, name: String },
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

impl Error {
    /// Process exit status for the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Invalid(_) | Error::NotMatroid | Error::InvalidWord { .. } | Error::BasisMismatch { .. } => 2,
            Error::CapExceeded { .. } => 65,
            Error::Malformed(_) | Error::OutOfRange { .. } | Error::Parse(_) | Error::Unknown { .. } => 64,
        }
    }
}
