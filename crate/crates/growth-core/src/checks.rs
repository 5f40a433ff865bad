//! Numerical verification of the structural properties a neoclassical
//! production function is assumed to have: homogeneity of degree `n` and
//! the Inada sign/limit conditions.
//!
//! Limits are untestable directly; they are verified as monotone trends of
//! the relevant derivative over a finite ladder of log-spaced probe points.

use crate::{CobbDouglas, Result, Tolerances};

/// Base relative finite-difference step. The effective step at a point `x`
/// is `h * max(1, |x|)`, clipped to stay inside the positive domain.
pub const DEFAULT_FD_STEP: f64 = 1e-5;

/// Number of ladder points used for each limit-trend check.
const TREND_POINTS: usize = 6;

/// Outcome of a single homogeneity test `F(lam K, lam L) = lam^n F(K, L)`,
/// measured in log space where the identity is exact up to round-off.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HomogeneityCheck {
    /// `|ln F(lam K, lam L) - n ln lam - ln F(K, L)|`
    pub residual: f64,
    pub passed: bool,
}

/// Verifies `F(lam K, lam L) = lam^n F(K, L)` at a single point.
pub fn check_homogeneity(
    p: &CobbDouglas,
    capital: f64,
    labor: f64,
    scale: f64,
    tol: &Tolerances,
) -> Result<HomogeneityCheck> {
    crate::GrowthError::require_positive("lambda", scale)?;
    let scaled = p.log_output(scale * capital, scale * labor)?;
    let base = p.log_output(capital, labor)?;
    let residual = (scaled - p.degree() * scale.ln() - base).abs();
    Ok(HomogeneityCheck {
        residual,
        passed: residual <= tol.abs_tol,
    })
}

/// Input axis of the production function.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    Capital,
    Labor,
}

impl std::fmt::Display for Axis {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Axis::Capital => write!(f, "K"),
            Axis::Labor => write!(f, "L"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignKind {
    /// `dF/dx > 0`
    FirstDerivativePositive,
    /// `d2F/dx2 < 0`; fails (value numerically zero) when the exponent on
    /// that axis equals 1, because the function is then linear in it.
    SecondDerivativeNegative,
}

/// A sign condition evaluated by central differences at one probe point.
#[derive(Debug, Clone, PartialEq)]
pub struct SignCheck {
    pub axis: Axis,
    pub kind: SignKind,
    pub probe: (f64, f64),
    pub value: f64,
    pub passed: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrendDirection {
    /// Derivative should grow without bound as the axis variable heads to 0+.
    TowardZero,
    /// Derivative should decay toward 0 as the axis variable heads to infinity.
    TowardInfinity,
}

/// A monotone-trend condition for one of the derivative limits.
#[derive(Debug, Clone, PartialEq)]
pub struct TrendCheck {
    pub axis: Axis,
    pub direction: TrendDirection,
    /// Probe values of the axis variable, in ladder order.
    pub probes: Vec<f64>,
    /// First derivative along the ladder.
    pub derivatives: Vec<f64>,
    pub passed: bool,
}

/// Full report of the Inada verification: per-probe sign conditions plus
/// the four limit trends. Degenerate exponents (alpha = 1 or beta = 1) are
/// reported as failed conditions rather than rejected inputs.
#[derive(Debug, Clone, PartialEq)]
pub struct InadaReport {
    pub signs: Vec<SignCheck>,
    pub trends: Vec<TrendCheck>,
}

impl InadaReport {
    pub fn all_passed(&self) -> bool {
        self.signs.iter().all(|c| c.passed) && self.trends.iter().all(|c| c.passed)
    }

    /// Sign conditions that did not hold, e.g. the vanishing diagonal
    /// second derivative at a unit exponent.
    pub fn failed_signs(&self) -> impl Iterator<Item = &SignCheck> {
        self.signs.iter().filter(|c| !c.passed)
    }

    pub fn failed_trends(&self) -> impl Iterator<Item = &TrendCheck> {
        self.trends.iter().filter(|c| !c.passed)
    }
}

fn step_at(x: f64, h: f64) -> f64 {
    // Relative step, clipped so x - h stays positive for tiny probes.
    (h * x.abs().max(1.0)).min(0.5 * x)
}

fn first_derivative(
    p: &CobbDouglas,
    axis: Axis,
    point: (f64, f64),
    h: f64,
) -> Result<f64> {
    let (x, other) = match axis {
        Axis::Capital => (point.0, point.1),
        Axis::Labor => (point.1, point.0),
    };
    let dx = step_at(x, h);
    let eval = |v: f64| match axis {
        Axis::Capital => p.evaluate(v, other),
        Axis::Labor => p.evaluate(other, v),
    };
    Ok((eval(x + dx)? - eval(x - dx)?) / (2.0 * dx))
}

fn second_derivative(
    p: &CobbDouglas,
    axis: Axis,
    point: (f64, f64),
    h: f64,
) -> Result<(f64, f64)> {
    let (x, other) = match axis {
        Axis::Capital => (point.0, point.1),
        Axis::Labor => (point.1, point.0),
    };
    let dx = step_at(x, h);
    let eval = |v: f64| match axis {
        Axis::Capital => p.evaluate(v, other),
        Axis::Labor => p.evaluate(other, v),
    };
    let center = eval(x)?;
    let value = (eval(x + dx)? - 2.0 * center + eval(x - dx)?) / (dx * dx);
    Ok((value, center))
}

/// Verifies the Inada conditions numerically at the given probe points.
///
/// At each probe, both first derivatives must be positive and both
/// diagonal second derivatives negative (the cross derivative of a
/// Cobb-Douglas function is positive, so only own-concavity is checked).
/// The two limit conditions per axis are checked as monotone trends over
/// a six-point log-spaced ladder. `h` is the base relative step for the
/// central differences; pass [`DEFAULT_FD_STEP`] unless probing something
/// unusual.
pub fn check_inada(p: &CobbDouglas, probes: &[(f64, f64)], h: f64) -> Result<InadaReport> {
    crate::GrowthError::require_positive("h", h)?;
    let mut signs = Vec::new();
    for &probe in probes {
        crate::GrowthError::require_positive("probe K", probe.0)?;
        crate::GrowthError::require_positive("probe L", probe.1)?;
        for axis in [Axis::Capital, Axis::Labor] {
            let x = match axis {
                Axis::Capital => probe.0,
                Axis::Labor => probe.1,
            };
            let dx = step_at(x, h);
            let d1 = first_derivative(p, axis, probe, h)?;
            let (d2, f_center) = second_derivative(p, axis, probe, h)?;
            // Noise floors of the central-difference formulas: eps*|F|/dx
            // for the first difference, 4*eps*|F|/dx^2 for the second.
            let noise1 = f64::EPSILON * f_center.abs() / dx;
            let noise2 = 4.0 * f64::EPSILON * f_center.abs() / (dx * dx);
            signs.push(SignCheck {
                axis,
                kind: SignKind::FirstDerivativePositive,
                probe,
                value: d1,
                passed: d1 > 10.0 * noise1,
            });
            signs.push(SignCheck {
                axis,
                kind: SignKind::SecondDerivativeNegative,
                probe,
                value: d2,
                passed: d2 < -10.0 * noise2,
            });
        }
    }

    let mut trends = Vec::new();
    for axis in [Axis::Capital, Axis::Labor] {
        for direction in [TrendDirection::TowardZero, TrendDirection::TowardInfinity] {
            let probes: Vec<f64> = (1..=TREND_POINTS)
                .map(|i| match direction {
                    TrendDirection::TowardZero => 10f64.powi(-(i as i32)),
                    TrendDirection::TowardInfinity => 10f64.powi(i as i32),
                })
                .collect();
            let mut derivatives = Vec::with_capacity(probes.len());
            for &x in &probes {
                let point = match axis {
                    Axis::Capital => (x, 1.0),
                    Axis::Labor => (1.0, x),
                };
                derivatives.push(first_derivative(p, axis, point, h)?);
            }
            // The margin keeps a flat sequence (unit exponent) from passing
            // on round-off; an exponent of 0.99 still moves ~2% per decade.
            let passed = match direction {
                TrendDirection::TowardZero => {
                    derivatives.windows(2).all(|w| w[1] > w[0] * (1.0 + 1e-9))
                }
                TrendDirection::TowardInfinity => {
                    derivatives.windows(2).all(|w| w[1] < w[0] * (1.0 - 1e-9))
                }
            };
            trends.push(TrendCheck {
                axis,
                direction,
                probes,
                derivatives,
                passed,
            });
        }
    }

    Ok(InadaReport { signs, trends })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn homogeneity_exact_identity() {
        let tol = Tolerances::default();
        let p = CobbDouglas::new(0.5, 0.5).unwrap();
        let c = check_homogeneity(&p, 1.0, 1.0, 2.0, &tol).unwrap();
        assert!(c.passed);
        assert!(c.residual < 1e-14);

        let p = CobbDouglas::new(0.3, 0.4).unwrap();
        assert!(check_homogeneity(&p, 2.0, 5.0, 3.0, &tol).unwrap().passed);

        let p = CobbDouglas::new(0.9, 0.9).unwrap();
        assert!(check_homogeneity(&p, 10.0, 0.1, 0.5, &tol).unwrap().passed);
    }

    #[test]
    fn inada_interior_case_passes() {
        let p = CobbDouglas::new(0.5, 0.5).unwrap();
        let report = check_inada(&p, &[(1.0, 1.0), (3.0, 0.5)], DEFAULT_FD_STEP).unwrap();
        assert!(report.all_passed(), "failures: {:?}", report.failed_signs().collect::<Vec<_>>());
    }

    #[test]
    fn inada_flags_linear_capital() {
        let p = CobbDouglas::new(1.0, 0.5).unwrap();
        let report = check_inada(&p, &[(1.0, 1.0)], DEFAULT_FD_STEP).unwrap();
        assert!(!report.all_passed());
        let failed: Vec<_> = report.failed_signs().collect();
        assert!(failed.iter().any(|c| c.axis == Axis::Capital
            && c.kind == SignKind::SecondDerivativeNegative
            && c.value.abs() < 1e-4));
        // labor-side concavity still holds
        assert!(report
            .signs
            .iter()
            .filter(|c| c.axis == Axis::Labor)
            .all(|c| c.passed));
    }

    #[test]
    fn inada_capital_derivative_grows_toward_zero() {
        // finite-difference ladder: dF/dK along K = 10^-1 .. 10^-6 at L = 1
        let p = CobbDouglas::new(0.3, 0.6).unwrap();
        let report = check_inada(&p, &[(1.0, 1.0)], DEFAULT_FD_STEP).unwrap();
        let trend = report
            .trends
            .iter()
            .find(|t| t.axis == Axis::Capital && t.direction == TrendDirection::TowardZero)
            .unwrap();
        assert!(trend.passed);
        assert!(trend.derivatives.windows(2).all(|w| w[1] > w[0]));
        // unbounded growth: the ladder spans many decades
        assert!(trend.derivatives[TREND_POINTS - 1] > 1e3 * trend.derivatives[0]);
    }

    #[test]
    fn inada_pass_iff_interior_exponents() {
        for (alpha, beta) in [(0.3, 0.6), (0.5, 0.5), (0.9, 0.99), (1.0, 0.5), (0.5, 1.0), (1.0, 1.0)]
        {
            let p = CobbDouglas::new(alpha, beta).unwrap();
            let report = check_inada(&p, &[(1.0, 1.0), (0.5, 2.0)], DEFAULT_FD_STEP).unwrap();
            let interior = alpha < 1.0 && beta < 1.0;
            assert_eq!(report.all_passed(), interior, "alpha={alpha}, beta={beta}");
            let degenerate_flags = report
                .failed_signs()
                .any(|c| c.kind == SignKind::SecondDerivativeNegative);
            assert_eq!(degenerate_flags, !interior, "alpha={alpha}, beta={beta}");
        }
    }
}
