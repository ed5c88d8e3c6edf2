//! Error type shared across the crate.

/// Errors produced by enumeration, conversion, and formula evaluation.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A generation request exceeded the configured size ceiling.
    #[error("length {n} exceeds the configured ceiling {limit} (Bell-scale enumeration must be opted into explicitly)")]
    ResourceLimit { n: usize, limit: usize },

    /// A word failed the restricted-growth conditions.
    #[error("not a restricted growth function: {0}")]
    NotRgf(String),

    /// Exact rational arithmetic produced a non-polynomial where a polynomial
    /// was required.
    #[error("rational is not a polynomial: {0}")]
    NonPolynomial(String),

    /// An id was not found in the relevant registry.
    #[error("unknown id: {0}")]
    UnknownId(String),

    /// Malformed or out-of-domain input.
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
