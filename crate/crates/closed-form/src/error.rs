use thiserror::Error;

/// Failures of exact-solution evaluation.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ClosedFormError {
    /// The formula's bracket went non-positive, so the solution cannot be
    /// continued in the positive domain. Unreachable for admissible
    /// parameters; guards extensions with alpha > 1.
    #[error("solution left the positive domain at t = {t}")]
    LeftPositiveDomain { t: f64 },

    /// A branch-specific formula was called with parameters belonging to
    /// the other branch.
    #[error("{formula} requires {requirement} (got alpha = {alpha}, n = {n})")]
    BranchMismatch {
        formula: &'static str,
        requirement: &'static str,
        alpha: f64,
        n: f64,
    },

    /// Negative times are outside the solved Cauchy problems.
    #[error("t = {t} is negative; solutions are defined for t >= 0")]
    NegativeTime { t: f64 },

    /// The value overflowed the double range.
    #[error("solution overflowed f64 at t = {t}")]
    Overflow { t: f64 },

    /// A numerical sub-computation (quadrature) failed at the given time.
    #[error("numerical failure at t = {t}: {source}")]
    NumericsAt {
        t: f64,
        source: numerics::NumericsError,
    },

    /// Trajectory assembly rejected the sampled series.
    #[error(transparent)]
    Growth(#[from] growth_core::GrowthError),
}

impl ClosedFormError {
    pub(crate) fn require_time(t: f64) -> Result<(), ClosedFormError> {
        if t < 0.0 || !t.is_finite() {
            return Err(ClosedFormError::NegativeTime { t });
        }
        Ok(())
    }

    pub(crate) fn finite_or_overflow(value: f64, t: f64) -> Result<f64, ClosedFormError> {
        if value.is_finite() && value > 0.0 {
            Ok(value)
        } else {
            Err(ClosedFormError::Overflow { t })
        }
    }
}
