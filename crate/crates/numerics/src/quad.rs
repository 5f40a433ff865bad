//! Globally adaptive quadrature on a 7-point Gauss / 15-point Kronrod
//! pair. The worst panel (largest error estimate) is bisected until the
//! summed error estimate meets `max(abs_tol, rel_tol * |result|)`, with a
//! per-panel subdivision depth limit of 60.

use crate::{NumericsError, Result};
use growth_core::Tolerances;
use std::collections::BinaryHeap;

// Kronrod nodes on [0, 1] (positive half, descending), Kronrod weights,
// and the embedded 7-point Gauss weights, kept at source precision.
#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
];
#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];
#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

const MAX_DEPTH: u32 = 60;
const MAX_PANELS: usize = 1_000_000;

/// A quadrature value with its accumulated error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadEstimate {
    pub value: f64,
    pub error_estimate: f64,
    /// Number of Gauss-Kronrod panels evaluated.
    pub panels: usize,
}

struct Panel {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
    depth: u32,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.error.total_cmp(&other.error)
    }
}

/// QUADPACK-style guard: never report less error than round-off permits,
/// and damp wild estimates on nearly-constant integrands.
fn rescale_error(err: f64, res_abs: f64, res_asc: f64) -> f64 {
    let mut scaled = err.abs();
    if res_asc != 0.0 && scaled != 0.0 {
        let scale = (200.0 * scaled / res_asc).powf(1.5);
        scaled = if scale < 1.0 { res_asc * scale } else { res_asc };
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        scaled = scaled.max(50.0 * f64::EPSILON * res_abs);
    }
    scaled
}

fn gk15<F>(g: &F, a: f64, b: f64) -> Result<(f64, f64)>
where
    F: Fn(f64) -> f64,
{
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);

    let eval = |x: f64| -> Result<f64> {
        let v = g(x);
        if !v.is_finite() {
            return Err(NumericsError::NonFiniteIntegrand { x });
        }
        Ok(v)
    };

    let f_center = eval(center)?;
    // the embedded 7-point Gauss rule also uses the center node
    let mut res_gauss = f_center * WG[3];
    let mut res_kronrod = f_center * WGK[7];
    let mut res_abs = res_kronrod.abs();

    let mut values = [(0.0f64, 0.0f64); 7];
    for (j, pair) in values.iter_mut().enumerate() {
        let dx = half * XGK[j];
        let f1 = eval(center - dx)?;
        let f2 = eval(center + dx)?;
        *pair = (f1, f2);
        res_kronrod += WGK[j] * (f1 + f2);
        res_abs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            res_gauss += WG[j / 2] * (f1 + f2);
        }
    }

    let mean = 0.5 * res_kronrod;
    let mut res_asc = WGK[7] * (f_center - mean).abs();
    for (j, &(f1, f2)) in values.iter().enumerate() {
        res_asc += WGK[j] * ((f1 - mean).abs() + (f2 - mean).abs());
    }

    let err = ((res_kronrod - res_gauss) * half).abs();
    let value = res_kronrod * half;
    Ok((value, rescale_error(err, res_abs * half.abs(), res_asc * half.abs())))
}

/// Integrates `g` over `[a, b]` to the requested tolerance.
///
/// Exact (to round-off) on polynomials within the Kronrod rule's degree.
/// If subdivision bottoms out, the error carries the best estimate found.
pub fn quad_adaptive<F>(g: F, a: f64, b: f64, tol: &Tolerances) -> Result<QuadEstimate>
where
    F: Fn(f64) -> f64,
{
    if !a.is_finite() || !b.is_finite() || a > b {
        return Err(NumericsError::InvalidInterval { a, b });
    }
    if a == b {
        return Ok(QuadEstimate {
            value: 0.0,
            error_estimate: 0.0,
            panels: 0,
        });
    }

    let (value, error) = gk15(&g, a, b)?;
    let mut heap = BinaryHeap::new();
    heap.push(Panel {
        a,
        b,
        value,
        error,
        depth: 0,
    });
    let mut total_value = value;
    let mut total_error = error;
    let mut panels = 1usize;

    loop {
        if total_error <= tol.target(total_value) {
            return Ok(QuadEstimate {
                value: total_value,
                error_estimate: total_error,
                panels,
            });
        }
        let worst = heap.pop().expect("heap holds at least one panel");
        if worst.depth >= MAX_DEPTH || panels >= MAX_PANELS {
            return Err(NumericsError::QuadratureNonConvergence {
                estimate: total_value,
                error_estimate: total_error,
            });
        }
        let mid = 0.5 * (worst.a + worst.b);
        let (lv, le) = gk15(&g, worst.a, mid)?;
        let (rv, re) = gk15(&g, mid, worst.b)?;
        total_value += lv + rv - worst.value;
        total_error += le + re - worst.error;
        panels += 1;
        heap.push(Panel {
            a: worst.a,
            b: mid,
            value: lv,
            error: le,
            depth: worst.depth + 1,
        });
        heap.push(Panel {
            a: mid,
            b: worst.b,
            value: rv,
            error: re,
            depth: worst.depth + 1,
        });
    }
}
