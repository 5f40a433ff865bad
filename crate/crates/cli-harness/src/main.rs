use clap::{Parser, Subcommand};
use cli_harness::{
    emit_csv, emit_summary_csv, parse_axis, parse_scenario, preset_with_overrides, run, sweep,
    verify, HarnessError, PresetName, RunResult, Scenario,
};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

/// Growth-model simulator: exact solutions, an independent integrator,
/// scenario sweeps, and CSV output.
#[derive(Parser)]
#[command(name = "solow", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a scenario file and write one CSV per trajectory.
    Run {
        /// Path to a scenario document (TOML).
        scenario: PathBuf,
        /// Output directory for CSV files.
        #[arg(long, default_value = "out")]
        out_dir: PathBuf,
    },
    /// Run a bundled scenario: fig1a, fig1b, fig2a, or fig2b.
    Preset {
        /// Preset name.
        name: String,
        /// Scenario overrides, e.g. --override n=0.9 --override k0=1,2.
        #[arg(long = "override", value_name = "KEY=VALUE")]
        overrides: Vec<String>,
        /// Output directory for CSV files.
        #[arg(long, default_value = "out")]
        out_dir: PathBuf,
        /// Print the canonical scenario document instead of running.
        #[arg(long)]
        print_scenario: bool,
    },
    /// Sweep scenario parameters over a grid and write a summary table.
    Sweep {
        /// Path to the base scenario document (TOML).
        scenario: PathBuf,
        /// Sweep axis, e.g. --axis n=0.8:1.2:3 (repeatable).
        #[arg(long = "axis", value_name = "KEY=START:STOP:COUNT", required = true)]
        axes: Vec<String>,
        /// Output directory for the summary CSV.
        #[arg(long, default_value = "out")]
        out_dir: PathBuf,
    },
    /// Run both solution paths and fail if they disagree.
    Verify {
        /// Path to a scenario document (TOML).
        scenario: PathBuf,
        /// Maximum allowed relative deviation between the paths.
        #[arg(long, default_value_t = 1e-6)]
        threshold: f64,
    },
}

fn load_scenario(path: &Path) -> Result<Scenario, HarnessError> {
    let text = std::fs::read_to_string(path).map_err(|source| HarnessError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_scenario(&text)
}

fn report_run(result: &RunResult, files: &[PathBuf]) {
    for file in files {
        println!("wrote {}", file.display());
    }
    if let Some(v) = &result.verification {
        for (k0, dev) in &v.per_k0 {
            println!("k0 = {k0}: max relative deviation {dev:.3e}");
        }
        println!("overall max relative deviation {:.3e}", v.max_relative_deviation);
    }
}

fn execute(cli: Cli) -> Result<(), HarnessError> {
    match cli.command {
        Command::Run { scenario, out_dir } => {
            let sc = load_scenario(&scenario)?;
            let result = run(&sc)?;
            let files = emit_csv(&result, &out_dir)?;
            report_run(&result, &files);
        }
        Command::Preset {
            name,
            overrides,
            out_dir,
            print_scenario,
        } => {
            let preset_name: PresetName = name.parse()?;
            let sc = preset_with_overrides(preset_name, &overrides)?;
            if print_scenario {
                print!("{}", sc.to_toml_string());
                return Ok(());
            }
            let result = run(&sc)?;
            let files = emit_csv(&result, &out_dir)?;
            report_run(&result, &files);
        }
        Command::Sweep {
            scenario,
            axes,
            out_dir,
        } => {
            let sc = load_scenario(&scenario)?;
            let axes = axes
                .iter()
                .map(|spec| parse_axis(spec))
                .collect::<Result<Vec<_>, _>>()?;
            let output = sweep(&sc, &axes)?;
            let path = emit_summary_csv(&output.summary_csv, &out_dir)?;
            let failed = output
                .cells
                .iter()
                .filter(|c| c.outcome.is_err())
                .count();
            println!("wrote {}", path.display());
            println!("{} cells, {} failed", output.cells.len(), failed);
        }
        Command::Verify {
            scenario,
            threshold,
        } => {
            let sc = load_scenario(&scenario)?;
            let result = verify(&sc, threshold)?;
            let v = result.verification.as_ref().expect("verify ran both paths");
            for (k0, dev) in &v.per_k0 {
                println!("k0 = {k0}: max relative deviation {dev:.3e}");
            }
            println!(
                "PASS: max relative deviation {:.3e} <= threshold {threshold:.3e}",
                v.max_relative_deviation
            );
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
