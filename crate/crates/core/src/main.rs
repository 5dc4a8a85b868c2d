//! Command-line front end: `lindblad-kt run <config>`.
//!
//! Exit codes: 0 on success, 2 for configuration problems (including bad
//! `--override` syntax), 3 when the run itself aborts.

use clap::{Parser, Subcommand};
use lindblad_kt::{config, runner};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "lindblad-kt", version, about = "Open-system density-matrix evolution on a finite-volume grid")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Execute the run described by a configuration file.
    Run {
        /// Path to a `key = value` configuration file.
        config: PathBuf,
        /// Override one configuration key, e.g. `--override grid.n_cells=100`.
        /// May be given multiple times; applied before validation.
        #[arg(long = "override", value_name = "KEY=VALUE")]
        overrides: Vec<String>,
        /// Shorthand for `--override output.directory=DIR`.
        #[arg(long, value_name = "DIR")]
        output_dir: Option<PathBuf>,
    },
}

const EXIT_CONFIG: u8 = 2;
const EXIT_RUNTIME: u8 = 3;

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Run {
            config,
            overrides,
            output_dir,
        } => run_command(&config, &overrides, output_dir),
    }
}

fn run_command(path: &Path, raw_overrides: &[String], output_dir: Option<PathBuf>) -> ExitCode {
    let mut overrides: Vec<(String, String)> = Vec::new();
    for raw in raw_overrides {
        match raw.split_once('=') {
            Some((k, v)) if !k.trim().is_empty() => {
                overrides.push((k.trim().to_string(), v.trim().to_string()));
            }
            _ => {
                eprintln!("invalid --override `{raw}`: expected KEY=VALUE");
                return ExitCode::from(EXIT_CONFIG);
            }
        }
    }
    if let Some(dir) = output_dir {
        overrides.push(("output.directory".to_string(), dir.display().to_string()));
    }

    let cfg = match config::load_config(path, &overrides) {
        Ok(cfg) => cfg,
        Err(e) => {
            eprint!("{e}");
            return ExitCode::from(EXIT_CONFIG);
        }
    };

    match runner::run(&cfg) {
        Ok(artifacts) => {
            println!(
                "completed t = {}: {} steps accepted, {} rejected, {} rhs evaluations",
                artifacts.final_state.time,
                artifacts.stats.steps_accepted,
                artifacts.stats.steps_rejected,
                artifacts.stats.rhs_evaluations
            );
            println!("artifacts written to {}", cfg.output_dir.display());
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("run aborted: {e}");
            ExitCode::from(EXIT_RUNTIME)
        }
    }
}
