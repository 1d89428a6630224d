use thiserror::Error;

use crate::model::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// An argument is outside the domain of the operation.
    #[error("{quantity} out of domain: {detail}")]
    Domain {
        quantity: &'static str,
        detail: String,
    },

    /// The network description could not be parsed.
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    /// A name in the network description does not resolve, or a profile
    /// breaks one of its invariants.
    #[error("configuration error: {0}")]
    Config(String),

    #[error("network failed validation with {} violation(s)", .0.len())]
    Validation(Vec<Violation>),

    #[error("unknown standard profile {0:?}")]
    UnknownStandard(String),

    #[error("invalid path: {0}")]
    Path(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn domain(quantity: &'static str, detail: impl Into<String>) -> Self {
        Error::Domain {
            quantity,
            detail: detail.into(),
        }
    }
}

impl From<serde_json::Error> for Error {
    fn from(err: serde_json::Error) -> Self {
        let (line, column) = (err.line(), err.column());
        let mut message = err.to_string();
        let suffix = format!(" at line {line} column {column}");
        if message.ends_with(&suffix) {
            message.truncate(message.len() - suffix.len());
        }
        Error::Parse {
            line,
            column,
            message,
        }
    }
}
