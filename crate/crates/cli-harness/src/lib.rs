//! Command-line front end for the growth models: scenario files, preset
//! scenarios, single runs, parameter sweeps, CSV emission, and
//! closed-form-vs-integrator verification.

mod emit;
mod error;
mod preset;
mod run;
mod scenario;
mod sweep;

pub use emit::{emit_csv, emit_summary_csv};
pub use error::HarnessError;
pub use preset::{preset, preset_with_overrides, PresetName};
pub use run::{run, verify, RunResult, TrajectoryRun, VerificationSummary};
pub use scenario::{parse_scenario, RunMethod, Scenario};
pub use sweep::{parse_axis, sweep, Axis, AxisKey, SweepOutput};

pub type Result<T> = std::result::Result<T, HarnessError>;
