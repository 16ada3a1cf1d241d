use thiserror::Error;

/// Errors raised by the library.
///
/// Variants are grouped by what the caller can do about them: parameter and
/// parse errors come from bad input, precondition errors name the violated
/// assumption of a closed form, and contract errors signal an internal bug.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid parameters for {family}: {reason}")]
    Parameter { family: String, reason: String },

    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },

    #[error("alpha = {0} is outside the allowed domain {1}")]
    Domain(f64, &'static str),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("singular evaluation: x = {x} is within {distance:e} of an eigenvalue")]
    Singular { x: f64, distance: f64 },

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("internal consistency error: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
