use thiserror::Error;

/// Errors shared by every module in the crate.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    /// A caller-supplied value violates an operation precondition.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Malformed tree text; the line number is 1-based.
    #[error("parse error: line {line}: {message}")]
    Parse { line: usize, message: String },

    /// A family specification that cannot be realized as a tree.
    #[error("infeasible spec: {0}")]
    InfeasibleSpec(String),

    /// An enumeration or construction request beyond the configured caps.
    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),

    /// A degree-preserving swap whose rewiring does not yield a tree.
    #[error("swap rejected: {0}")]
    SwapRejected(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub fn infeasible(msg: impl Into<String>) -> Self {
        Error::InfeasibleSpec(msg.into())
    }
}
