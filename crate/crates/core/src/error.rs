use thiserror::Error;

/// Errors raised by the generators, checkers and the exact substrate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument outside the operation's domain, e.g. a negative index.
    #[error("{what}: {detail}")]
    Domain { what: &'static str, detail: String },

    /// A surd that was expected to collapse to an integer did not.
    #[error("not an integer: {0}")]
    NotAnInteger(String),

    /// An exact division left a remainder.
    #[error("inexact division: {numerator} / {denominator}")]
    InexactDivision {
        numerator: String,
        denominator: String,
    },

    /// Negative power of a surd that is not a unit of Z[√2].
    #[error("{0} is not invertible in Z[√2]")]
    NotInvertible(String),
}

impl Error {
    pub(crate) fn domain(what: &'static str, detail: impl Into<String>) -> Self {
        Error::Domain {
            what,
            detail: detail.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
