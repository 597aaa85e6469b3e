//! Crate-wide error type.

use thiserror::Error;

/// Errors raised by construction-time validation and data loading.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A distribution or experiment parameter is outside its legal range.
    #[error("invalid parameter {name}: {reason} (got {value})")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    /// A sample or dataset violates a structural invariant.
    #[error("invalid data: {0}")]
    InvalidData(String),

    /// A CSV line failed to parse as a single positive real.
    #[error("{path}:{line}: {reason}")]
    Csv {
        path: String,
        line: usize,
        reason: String,
    },

    /// An operation was called on an input that cannot support it.
    #[error("unsupported operation: {0}")]
    Unsupported(String),
}

impl Error {
    pub(crate) fn param(name: &'static str, value: f64, reason: &'static str) -> Self {
        Error::InvalidParameter {
            name,
            value,
            reason,
        }
    }
}
