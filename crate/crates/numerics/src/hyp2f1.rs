//! Gauss hypergeometric function 2F1(a, b; c; z) for real arguments on the
//! principal real-analytic domain z < 1.
//!
//! Evaluation strategy:
//! - |z| <= 0.5: direct Gauss series.
//! - z < -0.5: Pfaff transformation, which maps z into (0, 1) where the
//!   series converges geometrically.
//! - 0.5 < z < 1: the 1-z connection formula (two convergent series plus
//!   gamma-function coefficients); when c - a - b is an integer the formula
//!   degenerates and the still-convergent direct series is used instead.
//!
//! z >= 1 sits on the branch cut and no branch choice is made here: it is a
//! domain error by design.

use crate::gamma::gamma;
use crate::{NumericsError, Result};

const MAX_TERMS: usize = 10_000;
const TERM_TOL: f64 = 1e-16;

fn is_nonpositive_integer(x: f64) -> bool {
    x < 0.5 && (x - x.round()).abs() < 1e-12
}

fn is_near_integer(x: f64) -> bool {
    (x - x.round()).abs() < 1e-6
}

/// Direct Gauss series. Converges for |z| < 1 (geometrically, with ratio
/// |z|); exposed so transformed evaluations can be cross-checked against
/// it on overlap regions.
pub fn hyp2f1_series(a: f64, b: f64, c: f64, z: f64) -> Result<f64> {
    if is_nonpositive_integer(c) {
        return Err(NumericsError::HypergeometricPole { c });
    }
    if z == 0.0 {
        return Ok(1.0);
    }
    if z.abs() >= 1.0 {
        return Err(NumericsError::HypergeometricBranchCut { z });
    }
    let mut term = 1.0f64;
    let mut sum = 1.0f64;
    for m in 0..MAX_TERMS {
        let mf = m as f64;
        term *= (a + mf) * (b + mf) / ((c + mf) * (mf + 1.0)) * z;
        sum += term;
        if term == 0.0 || term.abs() < TERM_TOL * sum.abs() {
            return Ok(sum);
        }
    }
    Err(NumericsError::HypergeometricNonConvergence {
        z,
        max_terms: MAX_TERMS,
    })
}

/// Pfaff transformation `(1-z)^{-a} 2F1(a, c-b; c; z/(z-1))`. For z < 0
/// the transformed argument lies in (0, 1).
pub fn hyp2f1_pfaff(a: f64, b: f64, c: f64, z: f64) -> Result<f64> {
    let w = z / (z - 1.0);
    let prefactor = (1.0 - z).powf(-a);
    Ok(prefactor * hyp2f1_series(a, c - b, c, w)?)
}

/// Connection formula in powers of 1 - z. `None` when a gamma coefficient
/// degenerates (integer c - a - b) and the caller should fall back.
fn hyp2f1_one_minus_z(a: f64, b: f64, c: f64, z: f64) -> Option<Result<f64>> {
    let cab = c - a - b;
    if is_near_integer(cab) {
        return None;
    }
    let w = 1.0 - z;

    // coefficient Gamma(c)Gamma(c-a-b) / (Gamma(c-a)Gamma(c-b)); a pole in
    // a denominator annihilates its term
    let gc = gamma(c)?;
    let coef1 = match (gamma(c - a), gamma(c - b)) {
        (Some(ga), Some(gb)) => gc * gamma(cab)? / (ga * gb),
        _ => 0.0,
    };
    let coef2 = match (gamma(a), gamma(b)) {
        (Some(ga), Some(gb)) => gc * gamma(-cab)? / (ga * gb),
        _ => 0.0,
    };

    let mut total = 0.0;
    if coef1 != 0.0 {
        match hyp2f1_series(a, b, a + b - c + 1.0, w) {
            Ok(s) => total += coef1 * s,
            Err(e) => return Some(Err(e)),
        }
    }
    if coef2 != 0.0 {
        match hyp2f1_series(c - a, c - b, cab + 1.0, w) {
            Ok(s) => total += coef2 * w.powf(cab) * s,
            Err(e) => return Some(Err(e)),
        }
    }
    Some(Ok(total))
}

/// 2F1(a, b; c; z) on the real principal domain z < 1.
pub fn hyp2f1(a: f64, b: f64, c: f64, z: f64) -> Result<f64> {
    if !(a.is_finite() && b.is_finite() && c.is_finite() && z.is_finite()) {
        return Err(NumericsError::HypergeometricBranchCut { z });
    }
    if is_nonpositive_integer(c) {
        return Err(NumericsError::HypergeometricPole { c });
    }
    if z >= 1.0 {
        return Err(NumericsError::HypergeometricBranchCut { z });
    }
    if z == 0.0 {
        return Ok(1.0);
    }
    if z.abs() <= 0.5 {
        hyp2f1_series(a, b, c, z)
    } else if z < 0.0 {
        hyp2f1_pfaff(a, b, c, z)
    } else {
        match hyp2f1_one_minus_z(a, b, c, z) {
            Some(result) => result,
            // integer c-a-b: the direct series still converges for z < 1
            None => hyp2f1_series(a, b, c, z),
        }
    }
}
