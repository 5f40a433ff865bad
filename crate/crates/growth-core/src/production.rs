use crate::{GrowthError, Result};

/// Cobb-Douglas production function `F(K, L) = K^alpha * L^beta` with
/// total-factor productivity fixed to 1.
///
/// The homogeneity degree `n = alpha + beta` classifies returns to scale:
/// `n < 1` decreasing, `n = 1` constant, `n > 1` increasing. It is always
/// derived from the two exponents, never stored separately.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CobbDouglas {
    alpha: f64,
    beta: f64,
}

impl CobbDouglas {
    /// Builds a production function from its exponents. Both must lie in
    /// `(0, 1]`; the closed upper boundary is admissible even though it
    /// degenerates the concavity conditions (see [`crate::check_inada`]).
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        for (name, value) in [("alpha", alpha), ("beta", beta)] {
            if !value.is_finite() {
                return Err(GrowthError::NonFinite { name, value });
            }
            if value <= 0.0 || value > 1.0 {
                return Err(GrowthError::OutOfRange {
                    name,
                    value,
                    constraint: "in (0, 1]",
                });
            }
        }
        Ok(Self { alpha, beta })
    }

    /// Builds a production function from the capital exponent and the
    /// homogeneity degree, deriving `beta = n - alpha`.
    pub fn from_degree(alpha: f64, n: f64) -> Result<Self> {
        if !n.is_finite() {
            return Err(GrowthError::NonFinite { name: "n", value: n });
        }
        Self::new(alpha, n - alpha)
    }

    /// Like [`CobbDouglas::new`] but admits any finite `beta <= 1`,
    /// including the negative values that arise from `alpha = 1` with
    /// `n < 1`. The dynamics and their exact solutions stay well-defined;
    /// the structural guarantees (monotonicity in labor, Inada) do not,
    /// so the standard constructors keep the strict range.
    pub fn with_extended_beta(alpha: f64, beta: f64) -> Result<Self> {
        if !alpha.is_finite() {
            return Err(GrowthError::NonFinite {
                name: "alpha",
                value: alpha,
            });
        }
        if alpha <= 0.0 || alpha > 1.0 {
            return Err(GrowthError::OutOfRange {
                name: "alpha",
                value: alpha,
                constraint: "in (0, 1]",
            });
        }
        if !beta.is_finite() {
            return Err(GrowthError::NonFinite {
                name: "beta",
                value: beta,
            });
        }
        if beta > 1.0 {
            return Err(GrowthError::OutOfRange {
                name: "beta",
                value: beta,
                constraint: "<= 1",
            });
        }
        Ok(Self { alpha, beta })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// Homogeneity degree `n = alpha + beta`.
    pub fn degree(&self) -> f64 {
        self.alpha + self.beta
    }

    /// `ln F(K, L) = alpha ln K + beta ln L`. All power laws are evaluated
    /// through this form so extreme inputs cannot overflow intermediates.
    pub fn log_output(&self, capital: f64, labor: f64) -> Result<f64> {
        GrowthError::require_positive("K", capital)?;
        GrowthError::require_positive("L", labor)?;
        Ok(self.alpha * capital.ln() + self.beta * labor.ln())
    }

    /// Output `F(K, L) = K^alpha * L^beta`, evaluated in log space.
    pub fn evaluate(&self, capital: f64, labor: f64) -> Result<f64> {
        Ok(self.log_output(capital, labor)?.exp())
    }

    /// Intensive form `f(k) = F(k, 1) = k^alpha`, production per unit of
    /// labor as a function of the capital-labor ratio.
    pub fn intensive(&self, ratio: f64) -> Result<f64> {
        GrowthError::require_positive("k", ratio)?;
        Ok((self.alpha * ratio.ln()).exp())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn evaluate_square_roots() {
        let p = CobbDouglas::new(0.5, 0.5).unwrap();
        assert_relative_eq!(p.evaluate(4.0, 9.0).unwrap(), 6.0, max_relative = 1e-14);
    }

    #[test]
    fn evaluate_identity_exponents() {
        let p = CobbDouglas::new(1.0, 1.0).unwrap();
        for (x, y) in [(2.0, 3.0), (0.25, 8.0), (123.0, 0.5)] {
            assert_relative_eq!(p.evaluate(x, y).unwrap(), x * y, max_relative = 1e-14);
        }
    }

    #[test]
    fn evaluate_matches_high_precision_reference() {
        // 40-digit mpmath: exp(0.3 ln 2 + 0.6 ln 3)
        let p = CobbDouglas::new(0.3, 0.6).unwrap();
        assert_relative_eq!(
            p.evaluate(2.0, 3.0).unwrap(),
            2.3800262745964406,
            max_relative = 1e-15
        );
    }

    #[test]
    fn intensive_basics() {
        let p = CobbDouglas::new(0.5, 0.3).unwrap();
        assert_relative_eq!(p.intensive(4.0).unwrap(), 2.0, max_relative = 1e-14);
        for alpha in [0.1, 0.5, 0.9, 1.0] {
            let p = CobbDouglas::new(alpha, 0.5).unwrap();
            assert_eq!(p.intensive(1.0).unwrap(), 1.0);
        }
    }

    #[test]
    fn intensive_matches_high_precision_reference() {
        // 40-digit mpmath: 2.5^0.7
        let p = CobbDouglas::new(0.7, 0.2).unwrap();
        assert_relative_eq!(
            p.intensive(2.5).unwrap(),
            1.8991444823309346,
            max_relative = 1e-15
        );
    }

    #[test]
    fn domain_errors() {
        let p = CobbDouglas::new(0.5, 0.5).unwrap();
        assert!(matches!(
            p.evaluate(0.0, 1.0),
            Err(GrowthError::NonPositive { name: "K", .. })
        ));
        assert!(matches!(
            p.evaluate(1.0, -2.0),
            Err(GrowthError::NonPositive { name: "L", .. })
        ));
        assert!(p.intensive(0.0).is_err());
        assert!(p.intensive(f64::NAN).is_err());
    }

    #[test]
    fn exponent_range_enforced() {
        assert!(CobbDouglas::new(0.0, 0.5).is_err());
        assert!(CobbDouglas::new(0.5, 1.5).is_err());
        assert!(CobbDouglas::new(-0.1, 0.5).is_err());
        assert!(CobbDouglas::new(1.0, 1.0).is_ok());
        assert!(CobbDouglas::from_degree(1.0, 2.5).is_err());
        let p = CobbDouglas::from_degree(0.7, 1.5).unwrap();
        assert_eq!(p.beta(), 0.8);
        assert_eq!(p.degree(), 1.5);
    }

    #[test]
    fn extended_beta_range() {
        // alpha = 1 with n < 1 forces beta < 0
        assert!(CobbDouglas::from_degree(1.0, 0.8).is_err());
        let p = CobbDouglas::with_extended_beta(1.0, -0.2).unwrap();
        assert_eq!(p.degree(), 0.8);
        assert!(CobbDouglas::with_extended_beta(1.0, 1.5).is_err());
        assert!(CobbDouglas::with_extended_beta(0.0, 0.5).is_err());
    }
}
