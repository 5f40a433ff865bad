use thiserror::Error;

/// Errors raised by domain-type construction and production-function
/// evaluation.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GrowthError {
    /// A quantity that must be strictly positive was not.
    #[error("{name} must be strictly positive, got {value}")]
    NonPositive { name: &'static str, value: f64 },

    /// A parameter fell outside its admissible range.
    #[error("{name} = {value} violates constraint {constraint}")]
    OutOfRange {
        name: &'static str,
        value: f64,
        constraint: &'static str,
    },

    /// A value was NaN or infinite where a finite number is required.
    #[error("{name} must be finite, got {value}")]
    NonFinite { name: &'static str, value: f64 },

    /// Trajectory series disagree in length.
    #[error("trajectory series lengths differ: times={times}, k={k}, L={labor}")]
    LengthMismatch {
        times: usize,
        k: usize,
        labor: usize,
    },

    /// Trajectory sample times are not strictly increasing.
    #[error("trajectory times must be strictly increasing (violated at index {index})")]
    NonIncreasingTimes { index: usize },

    /// A trajectory sample left the positive orthant.
    #[error("trajectory sample {name}[{index}] = {value} is not strictly positive and finite")]
    InvalidSample {
        name: &'static str,
        index: usize,
        value: f64,
    },
}

impl GrowthError {
    pub(crate) fn require_positive(name: &'static str, value: f64) -> Result<(), GrowthError> {
        if !value.is_finite() {
            return Err(GrowthError::NonFinite { name, value });
        }
        if value <= 0.0 {
            return Err(GrowthError::NonPositive { name, value });
        }
        Ok(())
    }

    pub(crate) fn require_nonnegative(name: &'static str, value: f64) -> Result<(), GrowthError> {
        if !value.is_finite() {
            return Err(GrowthError::NonFinite { name, value });
        }
        if value < 0.0 {
            return Err(GrowthError::OutOfRange {
                name,
                value,
                constraint: ">= 0",
            });
        }
        Ok(())
    }
}
