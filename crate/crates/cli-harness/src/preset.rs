//! Bundled reference scenarios, one per model/regime combination. The
//! documents live under `presets/` and double as schema examples; every
//! scenario key can be overridden from the command line.

use crate::scenario::{validate, K0Spec, RunMethod, ScenarioFile};
use crate::{HarnessError, Result, Scenario};
use std::str::FromStr;

const FIG1A: &str = include_str!("../presets/fig1a.toml");
const FIG1B: &str = include_str!("../presets/fig1b.toml");
const FIG2A: &str = include_str!("../presets/fig2a.toml");
const FIG2B: &str = include_str!("../presets/fig2b.toml");

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PresetName {
    Fig1a,
    Fig1b,
    Fig2a,
    Fig2b,
}

impl PresetName {
    pub const ALL: [PresetName; 4] = [
        PresetName::Fig1a,
        PresetName::Fig1b,
        PresetName::Fig2a,
        PresetName::Fig2b,
    ];

    pub fn document(&self) -> &'static str {
        match self {
            PresetName::Fig1a => FIG1A,
            PresetName::Fig1b => FIG1B,
            PresetName::Fig2a => FIG2A,
            PresetName::Fig2b => FIG2B,
        }
    }
}

impl std::fmt::Display for PresetName {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PresetName::Fig1a => write!(f, "fig1a"),
            PresetName::Fig1b => write!(f, "fig1b"),
            PresetName::Fig2a => write!(f, "fig2a"),
            PresetName::Fig2b => write!(f, "fig2b"),
        }
    }
}

impl FromStr for PresetName {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fig1a" => Ok(PresetName::Fig1a),
            "fig1b" => Ok(PresetName::Fig1b),
            "fig2a" => Ok(PresetName::Fig2a),
            "fig2b" => Ok(PresetName::Fig2b),
            other => Err(HarnessError::UnknownPreset {
                name: other.to_string(),
            }),
        }
    }
}

/// The preset scenario, exactly as bundled.
pub fn preset(name: PresetName) -> Scenario {
    crate::parse_scenario(name.document()).expect("bundled presets always validate")
}

fn parse_float(key: &str, value: &str) -> Result<f64> {
    value.parse::<f64>().map_err(|_| HarnessError::Constraint {
        key: key.to_string(),
        message: format!("`{value}` is not a number"),
    })
}

fn apply_override(file: &mut ScenarioFile, key: &str, value: &str) -> Result<()> {
    match key {
        "alpha" => file.alpha = parse_float(key, value)?,
        "n" => file.n = parse_float(key, value)?,
        "s" => file.s = parse_float(key, value)?,
        "gamma" => file.gamma = Some(parse_float(key, value)?),
        "r" => file.r = Some(parse_float(key, value)?),
        "L0" => file.l0 = parse_float(key, value)?,
        "Linf" => file.linf = Some(parse_float(key, value)?),
        "t_end" => file.t_end = parse_float(key, value)?,
        "abs_tol" => file.abs_tol = parse_float(key, value)?,
        "rel_tol" => file.rel_tol = parse_float(key, value)?,
        "samples" => {
            file.samples = value.parse::<usize>().map_err(|_| HarnessError::Constraint {
                key: key.to_string(),
                message: format!("`{value}` is not a sample count"),
            })?
        }
        "method" => {
            file.method = match value {
                "closed_form" => RunMethod::ClosedForm,
                "integrated" => RunMethod::Integrated,
                "both" => RunMethod::Both,
                other => {
                    return Err(HarnessError::Constraint {
                        key: key.to_string(),
                        message: format!(
                            "`{other}` is not a method (closed_form | integrated | both)"
                        ),
                    })
                }
            }
        }
        "k0" => {
            let values = value
                .split(',')
                .map(|v| parse_float(key, v.trim()))
                .collect::<Result<Vec<f64>>>()?;
            file.k0 = K0Spec::List(values);
        }
        "model" => {
            return Err(HarnessError::Constraint {
                key: key.to_string(),
                message: "the model cannot be overridden; pick the matching preset".to_string(),
            })
        }
        other => {
            return Err(HarnessError::Constraint {
                key: other.to_string(),
                message: "unknown override key".to_string(),
            })
        }
    }
    Ok(())
}

/// The preset scenario with `key=value` overrides applied, revalidated as
/// a whole.
pub fn preset_with_overrides(name: PresetName, overrides: &[String]) -> Result<Scenario> {
    let mut file: ScenarioFile = toml::from_str(name.document())
        .map_err(|e| HarnessError::Parse(e.to_string()))?;
    for spec in overrides {
        let (key, value) = spec.split_once('=').ok_or_else(|| HarnessError::Constraint {
            key: spec.clone(),
            message: "overrides take the form key=value".to_string(),
        })?;
        apply_override(&mut file, key.trim(), value.trim())?;
    }
    validate(file)
}
