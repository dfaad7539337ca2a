use thiserror::Error;

/// Errors produced by graph construction, the deciders, witness builders and the oracle.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// The parameters fall outside the regime a criterion covers (for example a
    /// circulant with two even lengths, which is disconnected).
    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("graphs are not isomorphic: {0}")]
    NotIsomorphic(String),

    /// An internal consistency check failed. Always a bug.
    #[error("invariant violation: {0}")]
    InvariantViolation(String),

    #[error("search exhausted its budget of {budget} nodes")]
    ResourceExhausted { budget: u64 },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}
