use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("element is not a member of the group: {0}")]
    NotMember(String),

    #[error("subgroup is not normal: {0}")]
    NotNormal(String),

    #[error("group is not transitive ({orbits} orbits)")]
    NotTransitive { orbits: usize },

    #[error("partition is not invariant: {0}")]
    NotInvariant(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("resource limit exceeded: {what} (limit {limit})")]
    Resource { what: String, limit: String },

    #[error("internal assertion failed: {0}")]
    Assertion(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub fn resource(what: impl Into<String>, limit: impl ToString) -> Self {
        Error::Resource {
            what: what.into(),
            limit: limit.to_string(),
        }
    }

    pub fn assertion(msg: impl Into<String>) -> Self {
        Error::Assertion(msg.into())
    }

    pub fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
