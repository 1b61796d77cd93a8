use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("degree error: {0}")]
    Degree(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("validation failed for {object}: {reason}")]
    Validation { object: String, reason: String },

    #[error("invalid section: {0}")]
    InvalidSection(String),

    #[error("value not in the image of the kernel inclusion: {0}")]
    ExactnessViolation(String),

    #[error("cochain is not a cocycle: {0}")]
    NotACocycle(String),

    #[error("representative is not closed: {0}")]
    NotClosed(String),

    #[error("polynomial is not admissible: {0}")]
    NotAdmissible(String),

    #[error("polynomial is not invariant: {0}")]
    NotInvariant(String),
}

impl Error {
    pub(crate) fn validation(object: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Validation { object: object.into(), reason: reason.into() }
    }
}
