use thiserror::Error;

/// Errors raised by the polynomial, family, classifier and code layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch { left: String, right: String },

    #[error("domain error: {0}")]
    Domain(String),

    /// A theorem or construction was asked about parameters outside its hypothesis range.
    #[error("{subject}: hypothesis violated: {reason}")]
    Hypothesis { subject: String, reason: String },

    #[error("capacity exceeded: {0}")]
    Capacity(String),

    /// An internal invariant failed. Seeing this means a bug, not bad input.
    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn hypothesis(subject: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Hypothesis {
            subject: subject.into(),
            reason: reason.into(),
        }
    }
}
