//! Error type shared by the whole crate.

use thiserror::Error;

/// Errors produced by matrix kernels, classifiers, and the CLI front end.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Malformed input: wrong dimensions, non-finite entries, bad indices.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A documented precondition does not hold (e.g. matrix not Hermitian).
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// The operation only supports a limited dimension range.
    #[error("unsupported dimension: {0}")]
    UnsupportedDimension(String),

    /// A period was requested for a curve that has none.
    #[error("not periodic: {0}")]
    NotPeriodic(String),

    /// The input lies outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// An iterative kernel failed to converge (should not happen at the
    /// supported scales; reported rather than silently truncated).
    #[error("no convergence: {0}")]
    NoConvergence(String),

    /// Document or flag parsing failed in the CLI layer.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Stable machine-readable tag for structured CLI error records.
    pub fn tag(&self) -> &'static str {
        match self {
            Error::InvalidInput(_) => "invalid-input",
            Error::Precondition(_) => "precondition",
            Error::UnsupportedDimension(_) => "unsupported-dimension",
            Error::NotPeriodic(_) => "not-periodic",
            Error::Domain(_) => "domain",
            Error::NoConvergence(_) => "no-convergence",
            Error::Parse(_) => "parse",
        }
    }
}
