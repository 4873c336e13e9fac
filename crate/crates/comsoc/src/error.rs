use thiserror::Error;

/// Crate-wide error type.
///
/// `Domain` covers malformed objects (a ranking that is not a permutation, a
/// self-arc, an out-of-range index). `Contract` covers structurally valid
/// inputs handed to an operation whose preconditions they violate (an approval
/// profile passed to a rank query, a committee size exceeding `m`).
/// `UnsupportedKind` flags operations invoked on the wrong instance flavor.
#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("contract error: {0}")]
    Contract(String),
    #[error("unsupported kind: {0}")]
    UnsupportedKind(String),
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
    pub fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }
    pub fn unsupported(msg: impl Into<String>) -> Self {
        Error::UnsupportedKind(msg.into())
    }
    pub fn resource(msg: impl Into<String>) -> Self {
        Error::ResourceLimit(msg.into())
    }
    pub fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, msg: msg.into() }
    }
}
