//! Adaptive Dormand-Prince 5(4) integration for the scalar ratio ODEs.
//!
//! The stepper is the classic 7-stage FSAL pair with PI step-size control
//! and the 4th-order continuous extension, so output at user grid points
//! is interpolated rather than forced by step restarts. Positivity is
//! enforced by rejection: a trial step that leaves the positive domain is
//! retried with a smaller step, and the run aborts with an error once the
//! step size underflows.

use crate::{NumericsError, Result};
use growth_core::{BertalanffyParams, ClassicalParams, Method, Tolerances, Trajectory};

// Dormand-Prince coefficients.
const C: [f64; 7] = [0.0, 1.0 / 5.0, 3.0 / 10.0, 4.0 / 5.0, 8.0 / 9.0, 1.0, 1.0];
const A: [[f64; 6]; 7] = [
    [0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [1.0 / 5.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [3.0 / 40.0, 9.0 / 40.0, 0.0, 0.0, 0.0, 0.0],
    [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0, 0.0, 0.0, 0.0],
    [
        19372.0 / 6561.0,
        -25360.0 / 2187.0,
        64448.0 / 6561.0,
        -212.0 / 729.0,
        0.0,
        0.0,
    ],
    [
        9017.0 / 3168.0,
        -355.0 / 33.0,
        46732.0 / 5247.0,
        49.0 / 176.0,
        -5103.0 / 18656.0,
        0.0,
    ],
    [
        35.0 / 384.0,
        0.0,
        500.0 / 1113.0,
        125.0 / 192.0,
        -2187.0 / 6784.0,
        11.0 / 84.0,
    ],
];
// 5th-order weights equal the last row of A (FSAL).
const B: [f64; 7] = [
    35.0 / 384.0,
    0.0,
    500.0 / 1113.0,
    125.0 / 192.0,
    -2187.0 / 6784.0,
    11.0 / 84.0,
    0.0,
];
// Difference between the 5th- and embedded 4th-order weights.
const E: [f64; 7] = [
    71.0 / 57600.0,
    0.0,
    -71.0 / 16695.0,
    71.0 / 1920.0,
    -17253.0 / 339200.0,
    22.0 / 525.0,
    -1.0 / 40.0,
];
// Continuous-extension weights.
const D: [f64; 7] = [
    -12715105075.0 / 11282082432.0,
    0.0,
    87487479700.0 / 32700410799.0,
    -10690763975.0 / 1880347072.0,
    701980252875.0 / 199316789632.0,
    -1453857185.0 / 822651844.0,
    69997945.0 / 29380423.0,
];

const SAFETY: f64 = 0.9;
const BETA: f64 = 0.04;
const MAX_SHRINK: f64 = 5.0;
const MAX_GROWTH: f64 = 10.0;
const MAX_STEPS: usize = 5_000_000;

/// A scalar initial value problem on `[0, t_end]`.
pub struct OdeProblem<R> {
    rhs: R,
    k0: f64,
    t_end: f64,
}

impl<R> OdeProblem<R>
where
    R: Fn(f64, f64) -> Result<f64>,
{
    pub fn new(rhs: R, k0: f64, t_end: f64) -> Result<Self> {
        if !k0.is_finite() || k0 <= 0.0 {
            return Err(NumericsError::InvalidProblem {
                reason: "k0 must be strictly positive",
            });
        }
        if !t_end.is_finite() || t_end <= 0.0 {
            return Err(NumericsError::InvalidProblem {
                reason: "t_end must be strictly positive",
            });
        }
        Ok(Self { rhs, k0, t_end })
    }

    pub fn k0(&self) -> f64 {
        self.k0
    }

    pub fn t_end(&self) -> f64 {
        self.t_end
    }
}

/// Result of an adaptive integration: the sampled trajectory plus step
/// statistics. `max_error_estimate` is the largest accepted per-step local
/// error estimate, which the controller keeps at or below the per-step
/// target `max(abs_tol, rel_tol * |k|)`.
#[derive(Debug, Clone)]
pub struct IntegrationReport {
    pub trajectory: Trajectory,
    pub steps_accepted: usize,
    pub steps_rejected: usize,
    pub max_error_estimate: f64,
}

struct DenseSegment {
    t0: f64,
    h: f64,
    cont: [f64; 5],
}

impl DenseSegment {
    fn eval(&self, t: f64) -> f64 {
        let theta = (t - self.t0) / self.h;
        let theta1 = 1.0 - theta;
        self.cont[0]
            + theta
                * (self.cont[1]
                    + theta1 * (self.cont[2] + theta * (self.cont[3] + theta1 * self.cont[4])))
    }
}

struct Stepper<'a, R> {
    rhs: &'a R,
    tol: Tolerances,
}

enum StepOutcome {
    /// Step evaluated cleanly; acceptance is the controller's call.
    Computed {
        k_new: f64,
        f_new: f64,
        error: f64,
        dense: DenseSegment,
    },
    /// A stage or the result left the domain; retry with a smaller step.
    DomainViolation,
}

impl<'a, R> Stepper<'a, R>
where
    R: Fn(f64, f64) -> Result<f64>,
{
    /// One trial step from `(t, k)` with derivative `f0 = rhs(t, k)`.
    fn try_step(&self, t: f64, k: f64, f0: f64, h: f64) -> Result<StepOutcome> {
        let mut stages = [0.0f64; 7];
        stages[0] = f0;
        for i in 1..6 {
            let mut acc = 0.0;
            for (j, stage) in stages.iter().enumerate().take(i) {
                acc += A[i][j] * stage;
            }
            let ki = k + h * acc;
            if !ki.is_finite() || ki <= 0.0 {
                return Ok(StepOutcome::DomainViolation);
            }
            match (self.rhs)(t + C[i] * h, ki) {
                Ok(v) if v.is_finite() => stages[i] = v,
                Ok(_) => return Ok(StepOutcome::DomainViolation),
                Err(NumericsError::NonPositiveRatio { .. }) => {
                    return Ok(StepOutcome::DomainViolation)
                }
                Err(e) => return Err(e),
            }
        }

        let mut acc = 0.0;
        for (j, stage) in stages.iter().enumerate().take(6) {
            acc += B[j] * stage;
        }
        let k_new = k + h * acc;
        if !k_new.is_finite() || k_new <= 0.0 {
            return Ok(StepOutcome::DomainViolation);
        }
        let f_new = match (self.rhs)(t + h, k_new) {
            Ok(v) if v.is_finite() => v,
            Ok(_) => return Ok(StepOutcome::DomainViolation),
            Err(NumericsError::NonPositiveRatio { .. }) => {
                return Ok(StepOutcome::DomainViolation)
            }
            Err(e) => return Err(e),
        };
        stages[6] = f_new;

        let mut err_acc = 0.0;
        for (j, stage) in stages.iter().enumerate() {
            err_acc += E[j] * stage;
        }
        let error = (h * err_acc).abs();

        let ydiff = k_new - k;
        let bspl = h * stages[0] - ydiff;
        let mut cont4 = 0.0;
        for (j, stage) in stages.iter().enumerate() {
            cont4 += D[j] * stage;
        }
        let dense = DenseSegment {
            t0: t,
            h,
            cont: [k, ydiff, bspl, ydiff - h * f_new - bspl, h * cont4],
        };
        Ok(StepOutcome::Computed {
            k_new,
            f_new,
            error,
            dense,
        })
    }

    fn scaled_error(&self, k: f64, k_new: f64, error: f64) -> f64 {
        error / self.tol.target(k.abs().max(k_new.abs()))
    }
}

fn initial_step<R>(rhs: &R, k0: f64, t_end: f64, tol: &Tolerances) -> Result<(f64, f64)>
where
    R: Fn(f64, f64) -> Result<f64>,
{
    let f0 = rhs(0.0, k0)?;
    let sk = tol.target(k0.abs());
    let d0 = k0.abs() / sk;
    let d1 = f0.abs() / sk;
    let mut h0 = if d0.min(d1) < 1e-10 {
        1e-6
    } else {
        0.01 * d0 / d1
    };
    h0 = h0.min(t_end);

    // one forward probe to estimate the second derivative scale
    let mut h_probe = h0;
    let mut d2 = 0.0;
    for _ in 0..20 {
        let k1 = k0 + h_probe * f0;
        if k1 > 0.0 {
            if let Ok(f1) = rhs(h_probe, k1) {
                if f1.is_finite() {
                    d2 = (f1 - f0).abs() / sk / h_probe;
                    break;
                }
            }
        }
        h_probe *= 0.5;
    }
    let h1 = if d1.max(d2) <= 1e-15 {
        (h0 * 1e-3).max(1e-6)
    } else {
        (0.01 / d1.max(d2)).powf(0.2)
    };
    Ok(((100.0 * h0).min(h1).min(t_end), f0))
}

/// Integrates the problem and samples the solution at the grid points.
///
/// `labor` supplies the `L(t)` channel of the returned trajectory (the
/// problem itself only evolves the ratio `k`). The grid must be strictly
/// increasing, start at or after 0, and stay within the problem span.
pub fn integrate<R, L>(
    problem: &OdeProblem<R>,
    labor: L,
    grid: &[f64],
    tol: Tolerances,
) -> Result<IntegrationReport>
where
    R: Fn(f64, f64) -> Result<f64>,
    L: Fn(f64) -> f64,
{
    for w in grid.windows(2) {
        if w[1] <= w[0] || w[1].partial_cmp(&w[0]).is_none() {
            return Err(NumericsError::InvalidGrid {
                reason: "grid times must be strictly increasing",
            });
        }
    }
    if let Some(&first) = grid.first() {
        if first < 0.0 {
            return Err(NumericsError::InvalidGrid {
                reason: "grid starts before t = 0",
            });
        }
    }
    if let Some(&last) = grid.last() {
        if last > problem.t_end * (1.0 + 1e-12) {
            return Err(NumericsError::InvalidGrid {
                reason: "grid extends past t_end",
            });
        }
    }

    let stepper = Stepper {
        rhs: &problem.rhs,
        tol,
    };
    let h_min = 1e-14 * problem.t_end;

    let mut times = Vec::with_capacity(grid.len());
    let mut ratios = Vec::with_capacity(grid.len());
    let mut next_out = 0;

    // emit the initial point if requested
    if let Some(&t0) = grid.first() {
        if t0 == 0.0 {
            times.push(0.0);
            ratios.push(problem.k0);
            next_out = 1;
        }
    }

    let (mut h, mut f_curr) = initial_step(&problem.rhs, problem.k0, problem.t_end, &tol)?;
    let mut t = 0.0;
    let mut k = problem.k0;
    let mut steps_accepted = 0usize;
    let mut steps_rejected = 0usize;
    let mut max_error = 0.0f64;
    let mut fac_old: f64 = 1e-4;
    let t_final = grid.last().copied().unwrap_or(problem.t_end);

    while t < t_final && next_out < grid.len() {
        if steps_accepted + steps_rejected > MAX_STEPS {
            return Err(NumericsError::StepSizeUnderflow { t, h });
        }
        h = h.min(t_final - t).max(h_min);

        match stepper.try_step(t, k, f_curr, h)? {
            StepOutcome::Computed {
                k_new,
                f_new,
                error,
                dense,
            } => {
                let err_scaled = stepper.scaled_error(k, k_new, error);
                if !err_scaled.is_finite() || err_scaled > 1.0 {
                    // reject on the error estimate
                    steps_rejected += 1;
                    let fac11 = err_scaled.max(1.0).powf(0.2 - BETA * 0.75);
                    h /= (fac11 / SAFETY).min(MAX_SHRINK);
                    if h < h_min {
                        return Err(NumericsError::StepSizeUnderflow { t, h });
                    }
                    continue;
                }

                // PI controller (error exponent 1/5 with a small integral term)
                let err_floor = err_scaled.max(1e-10);
                let fac11 = err_floor.powf(0.2 - BETA * 0.75);
                let fac = (fac11 / fac_old.powf(BETA) / SAFETY)
                    .clamp(1.0 / MAX_GROWTH, MAX_SHRINK);
                fac_old = err_floor.max(1e-4);

                t += h;
                steps_accepted += 1;
                max_error = max_error.max(error);

                while next_out < grid.len() && grid[next_out] <= t + 1e-15 * t.abs().max(1.0) {
                    let t_out = grid[next_out];
                    let k_out = if t_out == dense.t0 + dense.h {
                        k_new
                    } else {
                        dense.eval(t_out)
                    };
                    if !k_out.is_finite() || k_out <= 0.0 {
                        return Err(NumericsError::DomainExit { t: t_out });
                    }
                    times.push(t_out);
                    ratios.push(k_out);
                    next_out += 1;
                }

                k = k_new;
                f_curr = f_new;
                h /= fac;
            }
            StepOutcome::DomainViolation => {
                steps_rejected += 1;
                h *= 0.5;
                if h < h_min {
                    return Err(NumericsError::DomainExit { t });
                }
            }
        }
    }

    let labor_series: Vec<f64> = times.iter().map(|&t| labor(t)).collect();
    let trajectory = Trajectory::new(times, ratios, labor_series, Method::Integrated)?;
    Ok(IntegrationReport {
        trajectory,
        steps_accepted,
        steps_rejected,
        max_error_estimate: max_error,
    })
}

/// Fixed-step variant used for convergence-order diagnostics: `n_steps`
/// equal steps to `t_end`, no error control, returns the terminal ratio.
pub fn integrate_fixed_step<R>(problem: &OdeProblem<R>, n_steps: usize) -> Result<f64>
where
    R: Fn(f64, f64) -> Result<f64>,
{
    let stepper = Stepper {
        rhs: &problem.rhs,
        // irrelevant for fixed stepping; only try_step's tableau is used
        tol: Tolerances::default(),
    };
    let h = problem.t_end / n_steps as f64;
    let mut t = 0.0;
    let mut k = problem.k0;
    let mut f_curr = (problem.rhs)(0.0, k)?;
    for i in 0..n_steps {
        match stepper.try_step(t, k, f_curr, h)? {
            StepOutcome::Computed { k_new, f_new, .. } => {
                k = k_new;
                f_curr = f_new;
            }
            StepOutcome::DomainViolation => return Err(NumericsError::DomainExit { t }),
        }
        t = problem.t_end * (i + 1) as f64 / n_steps as f64;
    }
    Ok(k)
}

/// Oracle run for the exponential-labor model.
pub fn integrate_classical(
    p: &ClassicalParams,
    grid: &[f64],
    tol: Tolerances,
) -> Result<IntegrationReport> {
    let t_end = grid.last().copied().unwrap_or(0.0);
    if grid.is_empty() || t_end == 0.0 {
        // nothing to integrate; sample the initial state if asked
        let (times, ratios): (Vec<f64>, Vec<f64>) = if grid.is_empty() {
            (Vec::new(), Vec::new())
        } else {
            (vec![0.0], vec![p.k0()])
        };
        let labor: Vec<f64> = times.iter().map(|_| p.l0()).collect();
        return Ok(IntegrationReport {
            trajectory: Trajectory::new(times, ratios, labor, Method::Integrated)?,
            steps_accepted: 0,
            steps_rejected: 0,
            max_error_estimate: 0.0,
        });
    }
    let params = *p;
    let problem = OdeProblem::new(
        move |t, k| crate::rhs::rhs_cobb_classical(t, k, &params),
        p.k0(),
        t_end,
    )?;
    let l0 = p.l0();
    let gamma = p.gamma();
    integrate(&problem, |t| l0 * (gamma * t).exp(), grid, tol)
}

/// Oracle run for the saturating-labor model.
pub fn integrate_bertalanffy(
    p: &BertalanffyParams,
    grid: &[f64],
    tol: Tolerances,
) -> Result<IntegrationReport> {
    let t_end = grid.last().copied().unwrap_or(0.0);
    if grid.is_empty() || t_end == 0.0 {
        let (times, ratios): (Vec<f64>, Vec<f64>) = if grid.is_empty() {
            (Vec::new(), Vec::new())
        } else {
            (vec![0.0], vec![p.k0()])
        };
        let labor: Vec<f64> = times.iter().map(|_| p.l0()).collect();
        return Ok(IntegrationReport {
            trajectory: Trajectory::new(times, ratios, labor, Method::Integrated)?,
            steps_accepted: 0,
            steps_rejected: 0,
            max_error_estimate: 0.0,
        });
    }
    let params = *p;
    let problem = OdeProblem::new(
        move |t, k| crate::rhs::rhs_cobb_bertalanffy(t, k, &params),
        p.k0(),
        t_end,
    )?;
    let (l_inf, l0, r) = (p.l_inf(), p.l0(), p.r());
    integrate(
        &problem,
        |t| l_inf - (l_inf - l0) * (-r * t).exp(),
        grid,
        tol,
    )
}
