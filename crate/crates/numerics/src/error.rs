use thiserror::Error;

/// Failures of the numerical kernels. Non-convergence variants carry the
/// best estimate available so callers can report what was achieved.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum NumericsError {
    /// The right-hand side was evaluated at a non-positive ratio.
    #[error("ratio k = {k} is outside the positive domain")]
    NonPositiveRatio { k: f64 },

    /// The integrated trajectory left the positive orthant.
    #[error("trajectory left the positive domain near t = {t}")]
    DomainExit { t: f64 },

    /// Step-size control collapsed; the problem is stiff or blowing up.
    #[error("step size underflow at t = {t} (h = {h}): stiffness or blow-up")]
    StepSizeUnderflow { t: f64, h: f64 },

    /// The integration grid is malformed (not strictly increasing, or
    /// outside the problem's time span).
    #[error("invalid output grid: {reason}")]
    InvalidGrid { reason: &'static str },

    /// Invalid integration bounds for quadrature.
    #[error("invalid quadrature interval [{a}, {b}]")]
    InvalidInterval { a: f64, b: f64 },

    /// The integrand produced a non-finite value.
    #[error("integrand is not finite at x = {x}")]
    NonFiniteIntegrand { x: f64 },

    /// Adaptive subdivision hit its depth limit before reaching the
    /// requested tolerance.
    #[error("quadrature did not converge: best estimate {estimate} (error estimate {error_estimate})")]
    QuadratureNonConvergence { estimate: f64, error_estimate: f64 },

    /// Hypergeometric argument on or past the branch point: no branch is
    /// defined for real evaluation.
    #[error("hypergeometric argument z = {z} lies on the branch cut z >= 1")]
    HypergeometricBranchCut { z: f64 },

    /// `c` is a pole of the hypergeometric series.
    #[error("hypergeometric parameter c = {c} is a non-positive integer")]
    HypergeometricPole { c: f64 },

    /// The hypergeometric series failed to converge within the term cap.
    #[error("hypergeometric series did not converge within {max_terms} terms (z = {z})")]
    HypergeometricNonConvergence { z: f64, max_terms: usize },

    /// Invalid problem setup (non-positive initial ratio or time span).
    #[error("invalid problem: {reason}")]
    InvalidProblem { reason: &'static str },

    /// Errors from the domain layer (trajectory assembly).
    #[error(transparent)]
    Growth(#[from] growth_core::GrowthError),
}
