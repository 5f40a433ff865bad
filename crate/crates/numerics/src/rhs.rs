//! Right-hand sides of the capital-labor ratio ODEs, written directly from
//! the model dynamics so the integrated path shares nothing with the exact
//! solutions.
//!
//! The general variants accept an arbitrary intensive production function
//! `f(k)`; the Cobb-Douglas variants specialize `f(k) = k^alpha` and are
//! what the oracle runs use.

use crate::{NumericsError, Result};
use growth_core::{BertalanffyParams, ClassicalParams};

fn require_positive_ratio(k: f64) -> Result<()> {
    if !k.is_finite() || k <= 0.0 {
        return Err(NumericsError::NonPositiveRatio { k });
    }
    Ok(())
}

/// `dk/dt = s L(t)^{n-1} f(k) - gamma k` with exponential labor
/// `L(t) = L0 e^{gamma t}`.
pub fn rhs_general_classical<F>(t: f64, k: f64, p: &ClassicalParams, f: F) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    require_positive_ratio(k)?;
    let n = p.production().degree();
    // L(t)^{n-1} in log space: exp((n-1)(ln L0 + gamma t))
    let labor_pow = ((n - 1.0) * (p.l0().ln() + p.gamma() * t)).exp();
    Ok(p.s() * labor_pow * f(k) - p.gamma() * k)
}

/// Cobb-Douglas specialization: `dk/dt = s L0^{n-1} e^{(n-1) gamma t} k^alpha - gamma k`.
pub fn rhs_cobb_classical(t: f64, k: f64, p: &ClassicalParams) -> Result<f64> {
    require_positive_ratio(k)?;
    let alpha = p.production().alpha();
    let n = p.production().degree();
    let labor_pow = ((n - 1.0) * (p.l0().ln() + p.gamma() * t)).exp();
    let k_pow = (alpha * k.ln()).exp();
    Ok(p.s() * labor_pow * k_pow - p.gamma() * k)
}

/// `dk/dt = s L(t)^{n-1} f(k) - r k (Linf - L(t))` with saturating labor
/// `L(t) = Linf - (Linf - L0) e^{-r t}`.
pub fn rhs_general_bertalanffy<F>(t: f64, k: f64, p: &BertalanffyParams, f: F) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    require_positive_ratio(k)?;
    let n = p.production().degree();
    let gap = (p.l_inf() - p.l0()) * (-p.r() * t).exp();
    let labor = p.l_inf() - gap;
    let labor_pow = ((n - 1.0) * labor.ln()).exp();
    Ok(p.s() * labor_pow * f(k) - p.r() * k * gap)
}

/// Cobb-Douglas specialization of the saturating-labor dynamics.
pub fn rhs_cobb_bertalanffy(t: f64, k: f64, p: &BertalanffyParams) -> Result<f64> {
    let alpha = p.production().alpha();
    rhs_general_bertalanffy(t, k, p, |k| (alpha * k.ln()).exp())
}
