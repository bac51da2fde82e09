//! Crate-wide error type.
//!
//! Two failure classes matter to callers: malformed encodings (a file or
//! argument that does not describe any object of the right shape) and domain
//! rejections (a well-formed object the requested operation does not accept).
//! The CLI maps them to exit codes 2 and 1 respectively.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Structurally malformed input: dangling references, duplicate ids,
    /// unparseable files.
    #[error("malformed input: {0}")]
    Malformed(String),

    /// Well-formed input rejected by a precondition of the operation.
    #[error("{0}")]
    Rejected(String),
}

impl Error {
    pub fn malformed(msg: impl Into<String>) -> Self {
        Error::Malformed(msg.into())
    }

    pub fn rejected(msg: impl Into<String>) -> Self {
        Error::Rejected(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
