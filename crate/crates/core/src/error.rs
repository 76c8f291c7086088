use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// A physical or model parameter was NaN, infinite, or out of its domain.
    #[error("{name} must be {requirement}, got {value}")]
    InvalidParameter {
        name: &'static str,
        requirement: &'static str,
        value: f64,
    },

    /// Quantum number outside `1..=[√v0]+1`.
    #[error("quantum number n = {n} is out of range: must satisfy 1 <= n <= [sqrt(V0)]+1 = {limit} for V0 = {v0}")]
    StateOutOfRange { n: usize, limit: usize, v0: f64 },

    /// The branch function did not change sign on its interval.
    #[error("internal error: no sign change for state n = {n} on [{lo}, {hi}]")]
    NoBracket { n: usize, lo: f64, hi: f64 },

    /// The fitted parameter landed on the edge of its search box.
    #[error("fit did not converge: {parameter} = {value} hit the search box [{lo}, {hi}]; widen the box")]
    FitBoundary {
        parameter: &'static str,
        value: f64,
        lo: f64,
        hi: f64,
    },

    #[error("invalid fit configuration: {0}")]
    InvalidConfig(String),

    #[error("nothing to render: row list is empty")]
    EmptyRows,

    #[error("serialization failed: {0}")]
    Serialize(String),
}

/// Reject NaN, infinities and non-positive values.
pub(crate) fn require_positive(name: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() && value > 0.0 {
        Ok(value)
    } else {
        Err(Error::InvalidParameter {
            name,
            requirement: "positive and finite",
            value,
        })
    }
}

pub(crate) fn require_nonnegative(name: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() && value >= 0.0 {
        Ok(value)
    } else {
        Err(Error::InvalidParameter {
            name,
            requirement: "non-negative and finite",
            value,
        })
    }
}
