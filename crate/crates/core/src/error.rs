use thiserror::Error;

use crate::ring::BiDegree;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("cannot read {0}")]
    Io(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("malformed scheme: {0}")]
    MalformedScheme(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("coordinate change is not invertible")]
    SingularChange,
    #[error("generator search reached its window cap {0}")]
    CapReached(BiDegree),
    #[error("consistency check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
