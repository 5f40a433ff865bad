use crate::{ClosedFormError, Result};
use growth_core::{BertalanffyParams, ClassicalParams};

/// Exponential labor law `L(t) = L0 e^{gamma t}`.
pub fn labor_exponential(t: f64, p: &ClassicalParams) -> Result<f64> {
    ClosedFormError::require_time(t)?;
    Ok(p.l0() * (p.gamma() * t).exp())
}

/// Saturating labor law `L(t) = Linf - (Linf - L0) e^{-r t}`, monotone
/// nondecreasing toward the asymptote `Linf`.
pub fn labor_bertalanffy(t: f64, p: &BertalanffyParams) -> Result<f64> {
    ClosedFormError::require_time(t)?;
    Ok(p.l_inf() - (p.l_inf() - p.l0()) * (-p.r() * t).exp())
}
