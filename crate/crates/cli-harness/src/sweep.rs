//! Parameter sweeps over a base scenario. Axes are inclusive linear
//! ranges `key=start:stop:count`; the grid is the cartesian product in
//! row-major order (first axis outermost). Cells run independently (and
//! concurrently), per-cell failures are recorded without aborting the
//! sweep, and the summary is always emitted in grid order.

use crate::scenario::validate;
use crate::{HarnessError, Result, RunResult, Scenario};
use growth_core::ModelKind;
use rayon::prelude::*;
use std::fmt::Write as _;
use std::str::FromStr;

const MAX_CELLS: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AxisKey {
    Alpha,
    N,
    S,
    Gamma,
    R,
    Linf,
    K0,
}

impl std::fmt::Display for AxisKey {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            AxisKey::Alpha => "alpha",
            AxisKey::N => "n",
            AxisKey::S => "s",
            AxisKey::Gamma => "gamma",
            AxisKey::R => "r",
            AxisKey::Linf => "Linf",
            AxisKey::K0 => "k0",
        };
        write!(f, "{name}")
    }
}

impl FromStr for AxisKey {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "alpha" => Ok(AxisKey::Alpha),
            "n" => Ok(AxisKey::N),
            "s" => Ok(AxisKey::S),
            "gamma" => Ok(AxisKey::Gamma),
            "r" => Ok(AxisKey::R),
            "Linf" => Ok(AxisKey::Linf),
            "k0" => Ok(AxisKey::K0),
            other => Err(format!(
                "`{other}` is not sweepable (alpha, n, s, gamma, r, Linf, k0)"
            )),
        }
    }
}

/// One sweep dimension with its explicit grid values.
#[derive(Debug, Clone, PartialEq)]
pub struct Axis {
    pub key: AxisKey,
    pub values: Vec<f64>,
}

/// Parses `key=start:stop:count` into an inclusive linear range.
pub fn parse_axis(spec: &str) -> Result<Axis> {
    let bad = |message: String| HarnessError::BadAxis {
        spec: spec.to_string(),
        message,
    };
    let (key, range) = spec
        .split_once('=')
        .ok_or_else(|| bad("expected key=start:stop:count".to_string()))?;
    let key = AxisKey::from_str(key.trim()).map_err(bad)?;
    let parts: Vec<&str> = range.split(':').collect();
    if parts.len() != 3 {
        return Err(bad("expected start:stop:count".to_string()));
    }
    let start: f64 = parts[0]
        .trim()
        .parse()
        .map_err(|_| bad(format!("`{}` is not a number", parts[0])))?;
    let stop: f64 = parts[1]
        .trim()
        .parse()
        .map_err(|_| bad(format!("`{}` is not a number", parts[1])))?;
    let count: usize = parts[2]
        .trim()
        .parse()
        .map_err(|_| bad(format!("`{}` is not a count", parts[2])))?;
    if count == 0 {
        return Err(bad("count must be at least 1".to_string()));
    }
    if count == 1 && start != stop {
        return Err(bad("count = 1 requires start = stop".to_string()));
    }
    let values = (0..count)
        .map(|i| {
            if count == 1 {
                start
            } else {
                start + (stop - start) * i as f64 / (count - 1) as f64
            }
        })
        .collect();
    Ok(Axis { key, values })
}

/// Outcome of one grid cell, in grid order.
#[derive(Debug)]
pub struct SweepCell {
    pub settings: Vec<(AxisKey, f64)>,
    pub outcome: std::result::Result<RunResult, String>,
}

#[derive(Debug)]
pub struct SweepOutput {
    pub cells: Vec<SweepCell>,
    pub summary_csv: String,
}

fn scenario_for_cell(base: &Scenario, settings: &[(AxisKey, f64)]) -> Result<Scenario> {
    let mut file = base.to_file();
    for &(key, value) in settings {
        match key {
            AxisKey::Alpha => file.alpha = value,
            AxisKey::N => file.n = value,
            AxisKey::S => file.s = value,
            AxisKey::Gamma => {
                if base.model_kind() != ModelKind::Classical {
                    return Err(HarnessError::Constraint {
                        key: "gamma".to_string(),
                        message: "not a bertalanffy-model key (use r)".to_string(),
                    });
                }
                file.gamma = Some(value);
            }
            AxisKey::R => {
                if base.model_kind() != ModelKind::Bertalanffy {
                    return Err(HarnessError::Constraint {
                        key: "r".to_string(),
                        message: "not a classical-model key (use gamma)".to_string(),
                    });
                }
                file.r = Some(value);
            }
            AxisKey::Linf => {
                if base.model_kind() != ModelKind::Bertalanffy {
                    return Err(HarnessError::Constraint {
                        key: "Linf".to_string(),
                        message: "not a classical-model key".to_string(),
                    });
                }
                file.linf = Some(value);
            }
            AxisKey::K0 => file.k0 = crate::scenario::K0Spec::List(vec![value]),
        }
    }
    validate(file)
}

fn cell_settings(axes: &[Axis], index: usize) -> Vec<(AxisKey, f64)> {
    // row-major: the last axis varies fastest
    let mut remaining = index;
    let mut settings = vec![(AxisKey::Alpha, 0.0); axes.len()];
    for (slot, axis) in axes.iter().enumerate().rev() {
        let len = axis.values.len();
        settings[slot] = (axis.key, axis.values[remaining % len]);
        remaining /= len;
    }
    settings
}

fn summary_rows(cell: &SweepCell, t_end: f64, out: &mut String) {
    let settings: String = cell
        .settings
        .iter()
        .map(|(_, v)| v.to_string())
        .collect::<Vec<_>>()
        .join(",");
    match &cell.outcome {
        Ok(result) => {
            let runs = if result.closed_form.is_empty() {
                &result.integrated
            } else {
                &result.closed_form
            };
            for run in runs {
                let k_end = *run.trajectory.ratio().last().unwrap();
                let rate = k_end.ln() / t_end;
                let deviation = result
                    .verification
                    .as_ref()
                    .and_then(|v| {
                        v.per_k0
                            .iter()
                            .find(|(k0, _)| *k0 == run.k0)
                            .map(|(_, d)| d.to_string())
                    })
                    .unwrap_or_default();
                let _ = writeln!(
                    out,
                    "{settings},{k0},{k_end},{rate},{deviation},ok,",
                    k0 = run.k0
                );
            }
        }
        Err(message) => {
            let detail = message.replace([',', '\n'], ";");
            let _ = writeln!(out, "{settings},,,,,error,{detail}");
        }
    }
}

/// Runs the cartesian product of the axes over the base scenario.
///
/// Cell evaluation is embarrassingly parallel; results are buffered and
/// the summary is rendered single-threaded in deterministic order.
pub fn sweep(base: &Scenario, axes: &[Axis]) -> Result<SweepOutput> {
    if axes.is_empty() {
        return Err(HarnessError::BadAxis {
            spec: String::new(),
            message: "at least one --axis is required".to_string(),
        });
    }
    let cells: usize = axes.iter().map(|a| a.values.len()).product();
    if cells > MAX_CELLS {
        return Err(HarnessError::SweepTooLarge {
            cells,
            limit: MAX_CELLS,
        });
    }

    let outcomes: Vec<SweepCell> = (0..cells)
        .into_par_iter()
        .map(|index| {
            let settings = cell_settings(axes, index);
            let outcome = scenario_for_cell(base, &settings)
                .and_then(|sc| crate::run(&sc))
                .map_err(|e| e.to_string());
            SweepCell { settings, outcome }
        })
        .collect();

    let mut summary = String::new();
    let header: String = axes
        .iter()
        .map(|a| a.key.to_string())
        .collect::<Vec<_>>()
        .join(",");
    let _ = writeln!(summary, "{header},k0,k_end,rate_estimate,deviation,status,detail");
    for cell in &outcomes {
        summary_rows(cell, base.t_end(), &mut summary);
    }

    Ok(SweepOutput {
        cells: outcomes,
        summary_csv: summary,
    })
}
