use crate::{HarnessError, Result, RunMethod, Scenario};
use closed_form::trajectory_closed_form;
use growth_core::{ModelParams, Trajectory};
use numerics::{integrate_bertalanffy, integrate_classical};

/// One sampled trajectory, tagged with the initial ratio it started from.
#[derive(Debug, Clone)]
pub struct TrajectoryRun {
    pub k0: f64,
    pub trajectory: Trajectory,
}

/// Closed-form vs. integrated agreement, reported when both paths ran.
#[derive(Debug, Clone)]
pub struct VerificationSummary {
    /// `(k0, max relative deviation over the grid)` per initial condition.
    pub per_k0: Vec<(f64, f64)>,
    pub max_relative_deviation: f64,
}

/// Everything a scenario run produced.
#[derive(Debug, Clone)]
pub struct RunResult {
    pub scenario: Scenario,
    pub closed_form: Vec<TrajectoryRun>,
    pub integrated: Vec<TrajectoryRun>,
    pub verification: Option<VerificationSummary>,
}

fn integrate_model(params: &ModelParams, grid: &[f64], sc: &Scenario, k0: f64) -> Result<Trajectory> {
    let report = match params {
        ModelParams::Classical(p) => integrate_classical(p, grid, sc.tolerances()),
        ModelParams::Bertalanffy(p) => integrate_bertalanffy(p, grid, sc.tolerances()),
    }
    .map_err(|source| HarnessError::Integration { k0, source })?;
    Ok(report.trajectory)
}

/// Runs the scenario: for every initial ratio, the closed-form trajectory,
/// the integrated trajectory, or both (plus the deviation summary).
/// Identical scenarios produce identical results.
pub fn run(sc: &Scenario) -> Result<RunResult> {
    let grid = sc.grid();
    let tol = sc.tolerances();
    let mut closed = Vec::new();
    let mut integrated = Vec::new();

    for &k0 in sc.initial_conditions() {
        let params = sc.params_for(k0)?;
        if matches!(sc.method(), RunMethod::ClosedForm | RunMethod::Both) {
            let trajectory = trajectory_closed_form(&params, &grid, &tol)
                .map_err(|source| HarnessError::Evaluation { k0, source })?;
            closed.push(TrajectoryRun { k0, trajectory });
        }
        if matches!(sc.method(), RunMethod::Integrated | RunMethod::Both) {
            let trajectory = integrate_model(&params, &grid, sc, k0)?;
            integrated.push(TrajectoryRun { k0, trajectory });
        }
    }

    let verification = if sc.method() == RunMethod::Both {
        let per_k0: Vec<(f64, f64)> = closed
            .iter()
            .zip(&integrated)
            .map(|(c, i)| {
                let dev = c
                    .trajectory
                    .max_relative_deviation(&i.trajectory)
                    .unwrap_or(f64::INFINITY);
                (c.k0, dev)
            })
            .collect();
        let max = per_k0.iter().map(|&(_, d)| d).fold(0.0f64, f64::max);
        Some(VerificationSummary {
            per_k0,
            max_relative_deviation: max,
        })
    } else {
        None
    };

    Ok(RunResult {
        scenario: sc.clone(),
        closed_form: closed,
        integrated,
        verification,
    })
}

/// `run` with both paths forced, checked against a deviation threshold.
/// Exceeding the threshold is an error (exit code 4 at the CLI).
pub fn verify(sc: &Scenario, threshold: f64) -> Result<RunResult> {
    let result = run(&sc.clone().with_method(RunMethod::Both))?;
    let summary = result
        .verification
        .as_ref()
        .expect("method = both always produces a summary");
    if summary.max_relative_deviation > threshold {
        return Err(HarnessError::VerificationFailed {
            deviation: summary.max_relative_deviation,
            threshold,
        });
    }
    Ok(result)
}
