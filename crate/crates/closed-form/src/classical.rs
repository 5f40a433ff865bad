//! Exact solutions of
//! `dk/dt = s L0^{n-1} e^{(n-1) gamma t} k^alpha - gamma k`, `k(0) = k0`.
//!
//! For `alpha != 1` the Bernoulli substitution `v = k^{1-alpha}` gives
//!
//! ```text
//! k(t) = ( e^{(alpha-1) gamma t} [ s (1-alpha) L0^{n-1}
//!          (e^{gamma beta t} - 1)/(gamma beta) + k0^{1-alpha} ] )^{1/(1-alpha)}
//! ```
//!
//! and for `alpha = 1` the equation is linear with solution
//!
//! ```text
//! k(t) = k0 exp( s L0^{n-1} (e^{(n-1) gamma t} - 1)/((n-1) gamma) - gamma t ).
//! ```
//!
//! Both are assembled in log space: the bracket's exponential is switched
//! to an asymptotic form once `gamma beta t` is large, so late-time sweeps
//! cannot overflow intermediates even when the ratio itself still fits.

use crate::{expm1_over_x, ClosedFormBranch, ClosedFormError, Result};
use growth_core::ClassicalParams;

/// Threshold beyond which `e^x` may no longer participate in sums safely.
const LARGE_EXPONENT: f64 = 300.0;

fn ln_bracket(coef: f64, x: f64, k0_pow: f64) -> Option<f64> {
    // bracket = coef * (e^x - 1) + k0_pow, evaluated as a logarithm
    if coef == 0.0 {
        return Some(k0_pow.ln());
    }
    if x <= LARGE_EXPONENT {
        let bracket = coef * x.exp_m1() + k0_pow;
        if bracket <= 0.0 {
            return None;
        }
        Some(bracket.ln())
    } else {
        // bracket = coef e^x (1 + (k0_pow - coef) e^{-x} / coef)
        Some(coef.ln() + x + ((k0_pow - coef) * (-x).exp() / coef).ln_1p())
    }
}

/// Logarithm of the general-branch solution; shared by the value path and
/// large-time diagnostics.
pub(crate) fn ln_k_classical(t: f64, p: &ClassicalParams) -> Result<f64> {
    let alpha = p.production().alpha();
    let beta = p.production().beta();
    let n = p.production().degree();
    let gb = p.gamma() * beta;
    // s (1-alpha) L0^{n-1} / (gamma beta)
    let coef = p.s() * (1.0 - alpha) * ((n - 1.0) * p.l0().ln()).exp() / gb;
    let k0_pow = ((1.0 - alpha) * p.k0().ln()).exp();
    let ln_br = ln_bracket(coef, gb * t, k0_pow)
        .ok_or(ClosedFormError::LeftPositiveDomain { t })?;
    Ok(((alpha - 1.0) * p.gamma() * t + ln_br) / (1.0 - alpha))
}

/// General-branch solution (`alpha != 1`; `n = 1` is fine, nothing in the
/// formula degenerates there).
pub fn k_classical(t: f64, p: &ClassicalParams) -> Result<f64> {
    ClosedFormError::require_time(t)?;
    let alpha = p.production().alpha();
    if alpha == 1.0 {
        return Err(ClosedFormError::BranchMismatch {
            formula: "k_classical",
            requirement: "alpha != 1",
            alpha,
            n: p.production().degree(),
        });
    }
    ClosedFormError::finite_or_overflow(ln_k_classical(t, p)?.exp(), t)
}

/// Linear-branch solution for `alpha = 1`. Valid for every `n`; the
/// `n = 1` limit is taken through `expm1(x)/x`.
pub fn k_classical_alpha_one(t: f64, p: &ClassicalParams) -> Result<f64> {
    ClosedFormError::require_time(t)?;
    let alpha = p.production().alpha();
    let n = p.production().degree();
    if alpha != 1.0 {
        return Err(ClosedFormError::BranchMismatch {
            formula: "k_classical_alpha_one",
            requirement: "alpha = 1",
            alpha,
            n,
        });
    }
    let growth = p.s() * ((n - 1.0) * p.l0().ln()).exp() * t * expm1_over_x((n - 1.0) * p.gamma() * t);
    let value = p.k0() * (growth - p.gamma() * t).exp();
    ClosedFormError::finite_or_overflow(value, t)
}

/// Exact ratio at time `t`, dispatched on [`ClosedFormBranch`].
pub fn classical_solution(t: f64, p: &ClassicalParams) -> Result<f64> {
    match ClosedFormBranch::select(p.production().alpha(), p.production().degree()) {
        ClosedFormBranch::AlphaOne => k_classical_alpha_one(t, p),
        _ => k_classical(t, p),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use growth_core::CobbDouglas;

    fn params(alpha: f64, n: f64, s: f64, gamma: f64, l0: f64, k0: f64) -> ClassicalParams {
        let p = CobbDouglas::from_degree(alpha, n).unwrap();
        ClassicalParams::new(p, s, gamma, l0, k0).unwrap()
    }

    #[test]
    fn initial_condition() {
        for (alpha, n, k0) in [(0.5, 0.8, 1.0), (0.3, 1.2, 2.5), (0.999, 1.7, 17.0)] {
            let p = params(alpha, n, 0.4, 0.7, 1.0, k0);
            assert_relative_eq!(k_classical(0.0, &p).unwrap(), k0, max_relative = 1e-12);
        }
        let p = params(1.0, 1.2, 0.4, 0.7, 1.0, 3.0);
        assert_relative_eq!(
            k_classical_alpha_one(0.0, &p).unwrap(),
            3.0,
            max_relative = 1e-12
        );
    }

    #[test]
    fn zero_saving_is_pure_decay() {
        let p = params(0.5, 0.8, 0.0, 0.7, 1.0, 1.0);
        assert_relative_eq!(
            k_classical(1.0, &p).unwrap(),
            (-0.7f64).exp(),
            max_relative = 1e-14
        );
        let p = params(1.0, 1.2, 0.0, 0.5, 1.0, 2.0);
        assert_relative_eq!(
            k_classical_alpha_one(2.0, &p).unwrap(),
            2.0 * (-1.0f64).exp(),
            max_relative = 1e-14
        );
    }

    #[test]
    fn general_branch_matches_ode_oracle() {
        // 25-digit mpmath Taylor-series integration of the defining ODE
        let p = params(0.5, 0.8, 0.4, 0.7, 1.0, 1.0);
        assert_relative_eq!(
            k_classical(1.0, &p).unwrap(),
            0.7422111964931026,
            max_relative = 1e-13
        );
    }

    #[test]
    fn alpha_one_branch_matches_ode_oracle() {
        // 25-digit mpmath oracle; discriminates against the variant with
        // gamma dropped from the inner exponential, which is 1.4% off here
        let p = params(1.0, 1.2, 0.4, 0.7, 1.0, 1.0);
        assert_relative_eq!(
            k_classical_alpha_one(1.0, &p).unwrap(),
            0.7628862899760397,
            max_relative = 1e-13
        );
    }

    #[test]
    fn constant_returns_settles_at_steady_state() {
        // n = 1: k -> (s/gamma)^{1/(1-alpha)}
        let p = params(0.5, 1.0, 0.4, 0.7, 1.0, 1.0);
        let steady = (4.0f64 / 7.0).powi(2);
        assert!((k_classical(60.0, &p).unwrap() - steady).abs() < 1e-8);
        for k0 in [0.5, 2.0] {
            let p = params(0.5, 1.0, 0.4, 0.7, 1.0, k0);
            assert!((k_classical(60.0, &p).unwrap() - steady).abs() < 1e-8);
        }
    }

    #[test]
    fn branch_dispatch_and_mismatch() {
        let general = params(0.5, 0.8, 0.4, 0.7, 1.0, 1.0);
        let linear = params(1.0, 1.2, 0.4, 0.7, 1.0, 1.0);
        assert!(k_classical_alpha_one(1.0, &general).is_err());
        assert!(k_classical(1.0, &linear).is_err());
        assert_eq!(
            classical_solution(1.0, &general).unwrap(),
            k_classical(1.0, &general).unwrap()
        );
        assert_eq!(
            classical_solution(1.0, &linear).unwrap(),
            k_classical_alpha_one(1.0, &linear).unwrap()
        );
    }

    #[test]
    fn negative_time_rejected() {
        let p = params(0.5, 0.8, 0.4, 0.7, 1.0, 1.0);
        assert!(matches!(
            k_classical(-1e-9, &p),
            Err(ClosedFormError::NegativeTime { .. })
        ));
    }

    #[test]
    fn late_time_increasing_returns_does_not_overflow_intermediates() {
        // gamma beta t = 441 would overflow e^x if evaluated directly;
        // the asymptotic log form keeps the result finite and correct
        let p = params(0.5, 1.2, 0.4, 0.7, 1.0, 1.0);
        let t = 900.0;
        let k = k_classical(t, &p).unwrap();
        let rate = p.gamma() * (p.production().degree() - 1.0) / (1.0 - 0.5);
        assert_relative_eq!(k.ln() / t, rate, max_relative = 0.01);
    }

    #[test]
    fn overflow_is_reported_not_silent() {
        let p = params(1.0, 1.2, 0.4, 0.7, 1.0, 1.0);
        // exponent ~ e^{(n-1) gamma t} explodes well before t = 200
        assert!(matches!(
            k_classical_alpha_one(200.0, &p),
            Err(ClosedFormError::Overflow { .. })
        ));
    }
}
