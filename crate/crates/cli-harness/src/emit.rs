//! CSV emission. One file per trajectory, named
//! `<model>_<method>_k0=<value>.csv`, with header `t,k,L,K,method,k0` and
//! one row per sample. Floats are written in Rust's shortest round-trip
//! form, so identical runs produce byte-identical files.

use crate::{HarnessError, Result, RunResult, TrajectoryRun};
use growth_core::ModelKind;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> HarnessError + '_ {
    move |source| HarnessError::Io {
        path: path.to_path_buf(),
        source,
    }
}

fn render_trajectory(run: &TrajectoryRun) -> String {
    let method = run.trajectory.method();
    let mut out = String::from("t,k,L,K,method,k0\n");
    for (t, k, labor, capital) in run.trajectory.iter() {
        let _ = writeln!(out, "{t},{k},{labor},{capital},{method},{k0}", k0 = run.k0);
    }
    out
}

fn file_name(model: ModelKind, run: &TrajectoryRun) -> String {
    format!("{model}_{}_k0={}.csv", run.trajectory.method(), run.k0)
}

/// Writes every trajectory of the result below `dir` (created if absent).
/// Returns the paths written, in deterministic order.
pub fn emit_csv(result: &RunResult, dir: &Path) -> Result<Vec<PathBuf>> {
    fs::create_dir_all(dir).map_err(io_err(dir))?;
    let model = result.scenario.model_kind();
    let mut written = Vec::new();
    for run in result.closed_form.iter().chain(&result.integrated) {
        let path = dir.join(file_name(model, run));
        fs::write(&path, render_trajectory(run)).map_err(io_err(&path))?;
        written.push(path);
    }
    Ok(written)
}

/// Writes a sweep summary table to `dir/sweep_summary.csv`.
pub fn emit_summary_csv(summary: &str, dir: &Path) -> Result<PathBuf> {
    fs::create_dir_all(dir).map_err(io_err(dir))?;
    let path = dir.join("sweep_summary.csv");
    fs::write(&path, summary).map_err(io_err(&path))?;
    Ok(path)
}
