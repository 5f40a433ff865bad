use std::path::PathBuf;
use thiserror::Error;

/// Top-level harness failures, each mapped to a process exit code:
/// 2 for parse/validation problems, 3 for numerical failures, 4 for a
/// failed verification, 1 for I/O.
#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("scenario parse error: {0}")]
    Parse(String),

    #[error("invalid value for key `{key}`: {message}")]
    Constraint { key: String, message: String },

    #[error("unknown preset `{name}` (valid: fig1a, fig1b, fig2a, fig2b)")]
    UnknownPreset { name: String },

    #[error("invalid axis spec `{spec}`: {message}")]
    BadAxis { spec: String, message: String },

    #[error("sweep grid has {cells} cells, exceeding the limit of {limit}")]
    SweepTooLarge { cells: usize, limit: usize },

    #[error("evaluation failed for k0 = {k0}: {source}")]
    Evaluation {
        k0: f64,
        source: closed_form::ClosedFormError,
    },

    #[error("integration failed for k0 = {k0}: {source}")]
    Integration {
        k0: f64,
        source: numerics::NumericsError,
    },

    #[error("verification failed: max relative deviation {deviation:e} exceeds threshold {threshold:e}")]
    VerificationFailed { deviation: f64, threshold: f64 },

    #[error("I/O error on {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl HarnessError {
    pub fn exit_code(&self) -> u8 {
        match self {
            HarnessError::Parse(_)
            | HarnessError::Constraint { .. }
            | HarnessError::UnknownPreset { .. }
            | HarnessError::BadAxis { .. }
            | HarnessError::SweepTooLarge { .. } => 2,
            HarnessError::Evaluation { .. } | HarnessError::Integration { .. } => 3,
            HarnessError::VerificationFailed { .. } => 4,
            HarnessError::Io { .. } => 1,
        }
    }
}
