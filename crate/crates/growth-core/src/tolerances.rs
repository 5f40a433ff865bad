use crate::{GrowthError, Result};

/// Absolute/relative error budgets shared by the ODE integrator and the
/// adaptive quadrature. A computation with result `x` targets an error of
/// at most `max(abs_tol, rel_tol * |x|)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    pub abs_tol: f64,
    pub rel_tol: f64,
}

impl Tolerances {
    pub fn new(abs_tol: f64, rel_tol: f64) -> Result<Self> {
        GrowthError::require_positive("abs_tol", abs_tol)?;
        GrowthError::require_positive("rel_tol", rel_tol)?;
        Ok(Self { abs_tol, rel_tol })
    }

    /// Tight budgets for oracle runs, so that reference-path error is
    /// negligible against the comparison thresholds used in tests.
    pub fn oracle() -> Self {
        Self {
            abs_tol: 1e-12,
            rel_tol: 1e-10,
        }
    }

    /// Error target for a value of magnitude `|x|`.
    pub fn target(&self, x: f64) -> f64 {
        self.abs_tol.max(self.rel_tol * x.abs())
    }
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            abs_tol: 1e-10,
            rel_tol: 1e-8,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_and_validation() {
        let t = Tolerances::default();
        assert_eq!(t.abs_tol, 1e-10);
        assert_eq!(t.rel_tol, 1e-8);
        assert!(Tolerances::new(0.0, 1e-8).is_err());
        assert!(Tolerances::new(1e-10, -1.0).is_err());
        assert_eq!(t.target(100.0), 1e-6);
        assert_eq!(t.target(0.0), 1e-10);
    }
}
