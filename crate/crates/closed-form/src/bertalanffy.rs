//! Exact solutions of the saturating-labor Cauchy problem
//!
//! ```text
//! dk/dt = s (Linf - (Linf - L0) e^{-r t})^{n-1} k^alpha
//!         - r (Linf - L0) e^{-r t} k,    k(0) = k0.
//! ```
//!
//! For `alpha != 1` the Bernoulli substitution yields
//!
//! ```text
//! k(t) = ( e^{-(alpha-1)(Linf-L0) e^{-r t}}
//!          [ k0^{1-alpha} e^{(alpha-1)(Linf-L0)}
//!            - (alpha-1) INT_0^t g(tau) dtau ] )^{1/(1-alpha)}
//! ```
//!
//! with integrand `g(tau) = s L(tau)^{n-1} e^{(alpha-1)(Linf-L0) e^{-r tau}}`.
//! The integral has no elementary antiderivative and is evaluated by
//! adaptive quadrature.
//!
//! For `alpha = 1` the equation is linear; integrating `dk/k` directly
//! gives `k(t) = k0 exp( s INT_0^t L^{n-1} dtau + (Linf-L0)(e^{-r t} - 1) )`.
//! That integral also has a closed form in Gauss hypergeometric functions,
//! kept here as an optional cross-check and skipped whenever its arguments
//! leave the real-analytic domain `z < 1` (for admissible parameters
//! `Linf/(Linf-L0) > 1`, so it is always skipped in practice -- the
//! quadrature path is the solution of record).

use crate::{labor_bertalanffy, ClosedFormBranch, ClosedFormError, Result};
use growth_core::{BertalanffyParams, Tolerances};
use numerics::{hyp2f1, quad_adaptive, NumericsError};

/// Integrand of the exact solution:
/// `s L(tau)^{n-1} exp((alpha-1)(Linf-L0) e^{-r tau})`.
///
/// This is the simplified equivalent of the ratio form
/// `s L(tau)^n e^{r tau + ...} / (Linf (e^{r tau} - 1) + L0)`; the two are
/// identical because the denominator is exactly `e^{r tau} L(tau)`, and
/// this form stays finite as `L0 -> 0` where the ratio form's `tau = 0`
/// endpoint blows up.
pub fn bertalanffy_integrand(tau: f64, p: &BertalanffyParams) -> Result<f64> {
    ClosedFormError::require_time(tau)?;
    let n = p.production().degree();
    let alpha = p.production().alpha();
    let labor = labor_bertalanffy(tau, p)?;
    let decay = (p.l_inf() - p.l0()) * (-p.r() * tau).exp();
    Ok(p.s() * ((n - 1.0) * labor.ln()).exp() * ((alpha - 1.0) * decay).exp())
}

fn integral_of_integrand(t: f64, p: &BertalanffyParams, tol: &Tolerances) -> Result<f64> {
    let params = *p;
    let q = quad_adaptive(
        move |tau| {
            let n = params.production().degree();
            let alpha = params.production().alpha();
            let decay = (params.l_inf() - params.l0()) * (-params.r() * tau).exp();
            let labor = params.l_inf() - decay;
            params.s() * ((n - 1.0) * labor.ln()).exp() * ((alpha - 1.0) * decay).exp()
        },
        0.0,
        t,
        tol,
    )
    .map_err(|source| ClosedFormError::NumericsAt { t, source })?;
    Ok(q.value)
}

/// General-branch solution (`alpha != 1`).
pub fn k_bertalanffy(t: f64, p: &BertalanffyParams, tol: &Tolerances) -> Result<f64> {
    ClosedFormError::require_time(t)?;
    let alpha = p.production().alpha();
    if alpha == 1.0 {
        return Err(ClosedFormError::BranchMismatch {
            formula: "k_bertalanffy",
            requirement: "alpha != 1",
            alpha,
            n: p.production().degree(),
        });
    }
    let gap0 = p.l_inf() - p.l0();
    let c = (alpha - 1.0) * gap0;
    let integral = integral_of_integrand(t, p, tol)?;
    let bracket = ((1.0 - alpha) * p.k0().ln() + c).exp() - (alpha - 1.0) * integral;
    if bracket <= 0.0 || !bracket.is_finite() {
        return Err(ClosedFormError::LeftPositiveDomain { t });
    }
    let ln_k = (-c * (-p.r() * t).exp() + bracket.ln()) / (1.0 - alpha);
    ClosedFormError::finite_or_overflow(ln_k.exp(), t)
}

/// Linear-branch solution for `alpha = 1`, via the log-integral
/// `s INT_0^t L(tau)^{n-1} dtau` computed by adaptive quadrature. Valid for
/// every `n` including 1.
pub fn k_bertalanffy_alpha_one(t: f64, p: &BertalanffyParams, tol: &Tolerances) -> Result<f64> {
    ClosedFormError::require_time(t)?;
    let alpha = p.production().alpha();
    let n = p.production().degree();
    if alpha != 1.0 {
        return Err(ClosedFormError::BranchMismatch {
            formula: "k_bertalanffy_alpha_one",
            requirement: "alpha = 1",
            alpha,
            n,
        });
    }
    let params = *p;
    let labor_integral = quad_adaptive(
        move |tau| {
            let labor =
                params.l_inf() - (params.l_inf() - params.l0()) * (-params.r() * tau).exp();
            ((n - 1.0) * labor.ln()).exp()
        },
        0.0,
        t,
        tol,
    )
    .map_err(|source| ClosedFormError::NumericsAt { t, source })?;
    let exponent = p.s() * labor_integral.value + (p.l_inf() - p.l0()) * ((-p.r() * t).exp() - 1.0);
    ClosedFormError::finite_or_overflow(p.k0() * exponent.exp(), t)
}

/// The hypergeometric form of the `alpha = 1` solution, evaluated only
/// when every piece lies in the real-analytic domain; `Ok(None)` means the
/// cross-check was skipped. Admissible parameters always skip: the
/// hypergeometric arguments are `>= 1` whenever `0 < L0 <= Linf`.
pub fn k_bertalanffy_alpha_one_hypergeometric(
    t: f64,
    p: &BertalanffyParams,
) -> Result<Option<f64>> {
    ClosedFormError::require_time(t)?;
    let n = p.production().degree();
    if p.production().alpha() != 1.0 || n == 1.0 {
        return Ok(None);
    }
    let gap0 = p.l_inf() - p.l0();
    if gap0 == 0.0 {
        // the expression divides by Linf - L0
        return Ok(None);
    }
    let z1 = p.l_inf() / gap0;
    let z2 = p.l_inf() * (p.r() * t).exp() / gap0;
    let base1 = -p.l0() / gap0;
    let base2 = 1.0 - z2;
    let late_labor = p.l_inf() - gap0 * (-p.r() * t).exp();
    if z1 >= 1.0 || z2 >= 1.0 || base1 <= 0.0 || base2 <= 0.0 {
        return Ok(None);
    }
    let (a, c) = (1.0 - n, 2.0 - n);
    let f1 = match hyp2f1(a, a, c, z1) {
        Ok(v) => v,
        Err(
            NumericsError::HypergeometricBranchCut { .. } | NumericsError::HypergeometricPole { .. },
        ) => return Ok(None),
        Err(source) => return Err(ClosedFormError::NumericsAt { t, source }),
    };
    let f2 = match hyp2f1(a, a, c, z2) {
        Ok(v) => v,
        Err(
            NumericsError::HypergeometricBranchCut { .. } | NumericsError::HypergeometricPole { .. },
        ) => return Ok(None),
        Err(source) => return Err(ClosedFormError::NumericsAt { t, source }),
    };
    let scale = p.s() / ((n - 1.0) * p.r());
    let term1 = scale * p.l0().powf(n - 1.0) * base1.powf(1.0 - n) * f1;
    let term2 = scale * base2.powf(1.0 - n) * late_labor.powf(n - 1.0) * f2;
    let exponent = ((-p.r() * t).exp() - 1.0) * gap0 + term1 - term2;
    Ok(Some(p.k0() * exponent.exp()))
}

/// Exact ratio at time `t`, dispatched on [`ClosedFormBranch`].
pub fn bertalanffy_solution(t: f64, p: &BertalanffyParams, tol: &Tolerances) -> Result<f64> {
    match ClosedFormBranch::select(p.production().alpha(), p.production().degree()) {
        ClosedFormBranch::AlphaOne => k_bertalanffy_alpha_one(t, p, tol),
        _ => k_bertalanffy(t, p, tol),
    }
}
