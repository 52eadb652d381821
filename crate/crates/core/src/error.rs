use thiserror::Error;

/// Errors produced by the evaluation and verification layers.
///
/// Domain gates are strict: every operation rejects inputs outside its
/// certified range instead of returning a value of unknown accuracy.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("non-finite input: {0}")]
    NonFinite(f64),

    #[error("{what} out of domain: got {value}, need {constraint}")]
    OutOfDomain {
        what: &'static str,
        value: f64,
        constraint: &'static str,
    },

    #[error("dimension out of domain: got {value}, need {constraint}")]
    BadDimension {
        value: u32,
        constraint: &'static str,
    },

    #[error("regime violation: {op} requires {required}, parameters are {actual}")]
    RegimeViolation {
        op: &'static str,
        required: &'static str,
        actual: String,
    },

    #[error("quadrature did not converge to ln-tolerance {tol} on [{a}, {b}]")]
    QuadratureAccuracy { a: f64, b: f64, tol: f64 },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

pub type Result<T> = std::result::Result<T, Error>;
