use thiserror::Error;

/// Failures surfaced by the analysis pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurveError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("improper: e = {0}")]
    ImproperParametrization(usize),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

impl CurveError {
    /// Process exit code for the command line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            CurveError::InvalidInput(_) => 2,
            CurveError::ImproperParametrization(_) => 3,
            CurveError::Internal(_) => 4,
        }
    }
}

pub type Result<T> = std::result::Result<T, CurveError>;
