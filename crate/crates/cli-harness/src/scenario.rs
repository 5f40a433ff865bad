//! Scenario documents: a flat TOML schema covering both models.
//!
//! ```toml
//! model = "classical"        # or "bertalanffy"
//! alpha = 0.5                # capital exponent, in (0, 1]
//! n = 0.8                    # returns-to-scale degree; beta = n - alpha
//! s = 0.4                    # saving rate
//! gamma = 0.7                # labor growth rate   (classical only)
//! # r = 0.9                  # approach rate       (bertalanffy only)
//! L0 = 1.0                   # initial labor
//! # Linf = 5.0               # labor asymptote     (bertalanffy only)
//! k0 = [1.0, 1.5, 2.0]       # initial ratio(s); scalar or list
//! t_end = 10.0               # sampling horizon      (default 10)
//! samples = 400              # number of samples     (default 400)
//! abs_tol = 1e-10            # absolute error budget (default 1e-10)
//! rel_tol = 1e-8             # relative error budget (default 1e-8)
//! method = "both"            # closed_form | integrated | both (default both)
//! ```
//!
//! Unknown keys, missing keys, and constraint violations are parse errors
//! naming the key; a scenario is never partially constructed.

use crate::{HarnessError, Result};
use growth_core::{
    BertalanffyParams, ClassicalParams, CobbDouglas, ModelKind, ModelParams, Tolerances,
};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
pub enum RunMethod {
    #[serde(rename = "closed_form")]
    ClosedForm,
    #[serde(rename = "integrated")]
    Integrated,
    #[serde(rename = "both")]
    #[default]
    Both,
}

impl std::fmt::Display for RunMethod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RunMethod::ClosedForm => write!(f, "closed_form"),
            RunMethod::Integrated => write!(f, "integrated"),
            RunMethod::Both => write!(f, "both"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub(crate) enum K0Spec {
    Scalar(f64),
    List(Vec<f64>),
}

impl K0Spec {
    fn values(&self) -> Vec<f64> {
        match self {
            K0Spec::Scalar(v) => vec![*v],
            K0Spec::List(vs) => vs.clone(),
        }
    }
}

fn default_t_end() -> f64 {
    10.0
}
fn default_samples() -> usize {
    400
}
fn default_abs_tol() -> f64 {
    Tolerances::default().abs_tol
}
fn default_rel_tol() -> f64 {
    Tolerances::default().rel_tol
}

/// The raw document shape; validation happens when converting into
/// [`Scenario`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub(crate) struct ScenarioFile {
    pub model: String,
    pub alpha: f64,
    pub n: f64,
    pub s: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<f64>,
    #[serde(rename = "L0")]
    pub l0: f64,
    #[serde(rename = "Linf", skip_serializing_if = "Option::is_none")]
    pub linf: Option<f64>,
    pub k0: K0Spec,
    #[serde(default = "default_t_end")]
    pub t_end: f64,
    #[serde(default = "default_samples")]
    pub samples: usize,
    #[serde(default = "default_abs_tol")]
    pub abs_tol: f64,
    #[serde(default = "default_rel_tol")]
    pub rel_tol: f64,
    #[serde(default)]
    pub method: RunMethod,
}

/// A validated scenario: model parameters, the family of initial ratios,
/// the sampling grid, error budgets, and which path(s) to run.
#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    params: ModelParams,
    initial_conditions: Vec<f64>,
    t_end: f64,
    samples: usize,
    tolerances: Tolerances,
    method: RunMethod,
}

impl Scenario {
    pub fn params(&self) -> &ModelParams {
        &self.params
    }

    pub fn model_kind(&self) -> ModelKind {
        self.params.kind()
    }

    pub fn initial_conditions(&self) -> &[f64] {
        &self.initial_conditions
    }

    pub fn t_end(&self) -> f64 {
        self.t_end
    }

    pub fn samples(&self) -> usize {
        self.samples
    }

    pub fn tolerances(&self) -> Tolerances {
        self.tolerances
    }

    pub fn method(&self) -> RunMethod {
        self.method
    }

    pub(crate) fn with_method(mut self, method: RunMethod) -> Self {
        self.method = method;
        self
    }

    /// Model parameters restarted from the given initial ratio.
    pub fn params_for(&self, k0: f64) -> Result<ModelParams> {
        self.params
            .with_k0(k0)
            .map_err(|e| constraint("k0", e.to_string()))
    }

    /// Uniform sampling grid on `[0, t_end]`.
    pub fn grid(&self) -> Vec<f64> {
        let n = self.samples;
        (0..n)
            .map(|i| self.t_end * i as f64 / (n - 1) as f64)
            .collect()
    }

    /// Canonical document form; parsing it back yields an equal scenario.
    pub fn to_toml_string(&self) -> String {
        let file = self.to_file();
        toml::to_string(&file).expect("scenario serialization cannot fail")
    }

    pub(crate) fn to_file(&self) -> ScenarioFile {
        let production = self.params.production();
        let (model, gamma, r, l0, linf) = match &self.params {
            ModelParams::Classical(p) => {
                ("classical".to_string(), Some(p.gamma()), None, p.l0(), None)
            }
            ModelParams::Bertalanffy(p) => (
                "bertalanffy".to_string(),
                None,
                Some(p.r()),
                p.l0(),
                Some(p.l_inf()),
            ),
        };
        ScenarioFile {
            model,
            alpha: production.alpha(),
            n: production.degree(),
            s: match &self.params {
                ModelParams::Classical(p) => p.s(),
                ModelParams::Bertalanffy(p) => p.s(),
            },
            gamma,
            r,
            l0,
            linf,
            k0: K0Spec::List(self.initial_conditions.clone()),
            t_end: self.t_end,
            samples: self.samples,
            abs_tol: self.tolerances.abs_tol,
            rel_tol: self.tolerances.rel_tol,
            method: self.method,
        }
    }
}

fn constraint(key: &str, message: impl Into<String>) -> HarnessError {
    HarnessError::Constraint {
        key: key.to_string(),
        message: message.into(),
    }
}

pub(crate) fn validate(file: ScenarioFile) -> Result<Scenario> {
    let production = CobbDouglas::from_degree(file.alpha, file.n).map_err(|e| {
        constraint(
            "n",
            format!("beta = n - alpha must lie in (0, 1]: {e}"),
        )
    })?;

    let initial_conditions = file.k0.values();
    if initial_conditions.is_empty() {
        return Err(constraint("k0", "at least one initial ratio is required"));
    }
    for &k0 in &initial_conditions {
        if !k0.is_finite() || k0 <= 0.0 {
            return Err(constraint("k0", format!("must be strictly positive, got {k0}")));
        }
    }
    let k0_first = initial_conditions[0];

    let params = match file.model.as_str() {
        "classical" => {
            if file.r.is_some() {
                return Err(constraint("r", "not a classical-model key (use gamma)"));
            }
            if file.linf.is_some() {
                return Err(constraint("Linf", "not a classical-model key"));
            }
            let gamma = file
                .gamma
                .ok_or_else(|| constraint("gamma", "required for model = \"classical\""))?;
            ModelParams::Classical(
                ClassicalParams::new(production, file.s, gamma, file.l0, k0_first)
                    .map_err(|e| constraint("model parameters", e.to_string()))?,
            )
        }
        "bertalanffy" => {
            if file.gamma.is_some() {
                return Err(constraint("gamma", "not a bertalanffy-model key (use r)"));
            }
            let r = file
                .r
                .ok_or_else(|| constraint("r", "required for model = \"bertalanffy\""))?;
            let linf = file
                .linf
                .ok_or_else(|| constraint("Linf", "required for model = \"bertalanffy\""))?;
            ModelParams::Bertalanffy(
                BertalanffyParams::new(production, file.s, r, linf, file.l0, k0_first)
                    .map_err(|e| constraint("model parameters", e.to_string()))?,
            )
        }
        other => {
            return Err(constraint(
                "model",
                format!("must be \"classical\" or \"bertalanffy\", got \"{other}\""),
            ))
        }
    };

    if !(file.t_end.is_finite() && file.t_end > 0.0) {
        return Err(constraint("t_end", "must be strictly positive"));
    }
    if file.samples < 2 {
        return Err(constraint("samples", "at least 2 samples are required"));
    }
    let tolerances = Tolerances::new(file.abs_tol, file.rel_tol)
        .map_err(|e| constraint("abs_tol/rel_tol", e.to_string()))?;

    Ok(Scenario {
        params,
        initial_conditions,
        t_end: file.t_end,
        samples: file.samples,
        tolerances,
        method: file.method,
    })
}

/// Parses and validates a scenario document.
pub fn parse_scenario(text: &str) -> Result<Scenario> {
    let file: ScenarioFile =
        toml::from_str(text).map_err(|e| HarnessError::Parse(e.to_string()))?;
    validate(file)
}
