//! End-to-end run orchestration.
//!
//! [`run`] turns a validated [`RunConfig`] into artifacts on disk:
//!
//! * `series.tsv` — one row per sample time with the norm deviation and
//!   the mean absolute imaginary part, streamed as the run progresses so
//!   an aborted run keeps everything recorded up to the failure;
//! * `snapshot_t<time>.bin` — full density-matrix snapshots at the
//!   requested times, plus `snapshot_final.bin` for the end state;
//! * `manifest.txt` — the fully resolved configuration, the coefficient
//!   constraint checks, step statistics and wall-clock time.  Written on
//!   success and on abort (with the abort time and error).
//!
//! Constraint checks are reported in the manifest but never block a run:
//! exploring parameter sets outside the validity region is a legitimate
//! use of the solver.

use crate::config::{InitialSpec, PotentialKind, RunConfig};
use crate::diagnostics::{antidiagonal, fit_temperature, imag_violation, norm_deviation, trace, DiagnosticsSeries};
use crate::grid::{apply_boundary, Grid, State};
use crate::initial::{from_pure_state, Wavefunction};
use crate::integrator::{integrate, StepStats};
use crate::model::{LindbladModel, Potential};
use crate::scheme::{KtRhs, RhsWorkspace};
use crate::snapshot::write_snapshot;
use crate::units::{check_dekker, check_harmonic_condition, derive_coefficients, ConstraintStatus, InternalParams};
use crate::Error;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::time::Instant;

/// Everything a completed run leaves behind, plus in-memory copies of the
/// final state and diagnostics for callers that post-process.
#[derive(Debug)]
pub struct RunArtifacts {
    pub final_state: State,
    pub series: DiagnosticsSeries,
    pub stats: StepStats,
    pub series_path: PathBuf,
    pub manifest_path: PathBuf,
    pub snapshot_paths: Vec<PathBuf>,
}

/// Builds the internal parameter set and the master-equation model for a
/// configuration.
pub fn build_model(cfg: &RunConfig) -> (InternalParams, LindbladModel) {
    let internal = cfg.physics.to_internal();
    let coeffs = derive_coefficients(&internal);
    let potential = match cfg.potential {
        PotentialKind::SquareWell => Potential::SquareWell,
        PotentialKind::Harmonic => Potential::Harmonic {
            mass: internal.mass,
            omega: internal.osc_omega,
        },
    };
    let model = LindbladModel {
        mass: internal.mass,
        gamma: internal.gamma,
        coeffs,
        potential,
    };
    (internal, model)
}

/// Samples the configured pure state onto the grid (ghosts left zero).
pub fn initial_state(
    cfg: &RunConfig,
    grid: Grid,
    internal: &InternalParams,
) -> Result<State, Error> {
    let psi = match cfg.initial {
        InitialSpec::BoxEigenstate { n } => Wavefunction::box_eigenstate(n, grid.extent_l)?,
        InitialSpec::HarmonicEigenstate { n } => {
            Wavefunction::harmonic_eigenstate(n, internal.mass, internal.osc_omega)?
        }
        InitialSpec::Gaussian { width_a } => Wavefunction::gaussian(width_a)?,
        InitialSpec::Rectangular { half_width } => Wavefunction::rectangular(half_width)?,
    };
    from_pure_state(grid, &psi)
}

/// Merged, strictly increasing list of times the integrator must land on:
/// the series stride, the snapshot times and the final time.
pub fn observation_times(cfg: &RunConfig) -> Vec<f64> {
    let mut times = Vec::new();
    if cfg.series_stride > 0.0 {
        let mut k = 1u64;
        loop {
            let t = k as f64 * cfg.series_stride;
            if t >= cfg.t_final {
                break;
            }
            times.push(t);
            k += 1;
        }
    }
    times.extend(cfg.snapshot_times.iter().copied());
    times.push(cfg.t_final);
    times.sort_by(|a, b| a.partial_cmp(b).expect("observation times are finite"));
    times.dedup();
    times
}

fn constraint_label(status: ConstraintStatus) -> &'static str {
    match status {
        ConstraintStatus::Satisfied => "satisfied",
        ConstraintStatus::Violated => "violated",
        ConstraintStatus::NotApplicable => "not applicable",
    }
}

struct ManifestData<'a> {
    cfg: &'a RunConfig,
    dekker: String,
    oscillator: String,
    trace0: f64,
    status: String,
    stats: Option<StepStats>,
    series_rows: usize,
    fitted_temperature: Option<f64>,
    wall_clock_s: f64,
    snapshots: &'a [PathBuf],
}

fn write_manifest(data: &ManifestData) -> Result<PathBuf, Error> {
    let path = data.cfg.output_dir.join("manifest.txt");
    let mut w = BufWriter::new(File::create(&path)?);
    writeln!(w, "status = {}", data.status)?;
    writeln!(w)?;
    writeln!(w, "# resolved configuration")?;
    for (key, value) in data.cfg.resolved_entries() {
        writeln!(w, "{key} = {value}")?;
    }
    writeln!(w)?;
    writeln!(w, "# model checks (reported, never enforced)")?;
    writeln!(w, "positivity_inequality = {}", data.dekker)?;
    writeln!(w, "oscillator_validity = {}", data.oscillator)?;
    writeln!(w, "initial_trace = {}", data.trace0)?;
    writeln!(w)?;
    writeln!(w, "# results")?;
    if let Some(stats) = data.stats {
        writeln!(w, "steps_accepted = {}", stats.steps_accepted)?;
        writeln!(w, "steps_rejected = {}", stats.steps_rejected)?;
        writeln!(w, "rhs_evaluations = {}", stats.rhs_evaluations)?;
        writeln!(w, "dt_last = {}", stats.dt_last)?;
    }
    writeln!(w, "series_rows = {}", data.series_rows)?;
    match data.fitted_temperature {
        Some(t) => writeln!(w, "fitted_temperature_mev = {t}")?,
        None => writeln!(w, "fitted_temperature_mev = n/a")?,
    }
    writeln!(w, "wall_clock_s = {}", data.wall_clock_s)?;
    writeln!(w)?;
    writeln!(w, "# artifacts")?;
    writeln!(w, "series = series.tsv")?;
    for s in data.snapshots {
        if let Some(name) = s.file_name() {
            writeln!(w, "snapshot = {}", name.to_string_lossy())?;
        }
    }
    w.flush()?;
    Ok(path)
}

/// Executes one run to completion, streaming artifacts into the output
/// directory.  On a numerical abort the partial series and a manifest
/// describing the failure are left behind and the error is returned.
pub fn run(cfg: &RunConfig) -> Result<RunArtifacts, Error> {
    let started = Instant::now();
    std::fs::create_dir_all(&cfg.output_dir)?;

    let grid = Grid::new(cfg.extent_l, cfg.n_cells)?;
    cfg.physics.validate()?;
    let (internal, model) = build_model(cfg);
    let coeffs = model.coeffs;
    let dekker = constraint_label(check_dekker(&coeffs, internal.gamma));
    let oscillator = if cfg.potential == PotentialKind::Harmonic && internal.gamma > 0.0 {
        constraint_label(check_harmonic_condition(
            &coeffs,
            internal.mass,
            internal.osc_omega,
            internal.gamma,
        )?)
    } else {
        "not applicable"
    };

    let rhs = KtRhs::new(model, grid)?;
    let mut ws = RhsWorkspace::new(&grid);
    let mut state = initial_state(cfg, grid, &internal)?;
    apply_boundary(&mut state, cfg.boundary);
    let trace0 = trace(&state);
    if !(trace0 > 0.0) {
        return Err(Error::Diagnostic(format!(
            "initial state has non-positive trace {trace0}"
        )));
    }

    let targets = observation_times(cfg);
    let series_path = cfg.output_dir.join("series.tsv");
    let mut series_file = BufWriter::new(File::create(&series_path)?);
    writeln!(series_file, "time\tnorm_dev\timag_violation")?;

    let snapshot_bits: Vec<u64> = cfg.snapshot_times.iter().map(|t| t.to_bits()).collect();
    let mut series = DiagnosticsSeries::default();
    let mut snapshot_paths: Vec<PathBuf> = Vec::new();
    let policy = cfg.boundary;

    let result = integrate(
        &mut state,
        &cfg.stepper,
        &targets,
        |s| apply_boundary(s, policy),
        |s, out| rhs.evaluate(s, &mut ws, out),
        |s| {
            let n = norm_deviation(s, trace0)?;
            let i = imag_violation(s);
            series.push(s.time, n, i)?;
            writeln!(series_file, "{}\t{}\t{}", s.time, n, i)?;
            // Flush per sample so an abort loses nothing already observed.
            series_file.flush()?;
            if snapshot_bits.contains(&s.time.to_bits()) {
                let path = cfg.output_dir.join(format!("snapshot_t{}.bin", s.time));
                write_snapshot(s, &path)?;
                snapshot_paths.push(path);
            }
            Ok(())
        },
    );
    drop(series_file);

    match result {
        Err(e) => {
            write_manifest(&ManifestData {
                cfg,
                dekker: dekker.into(),
                oscillator: oscillator.into(),
                trace0,
                status: format!("aborted at t = {} ({e})", state.time),
                stats: None,
                series_rows: series.len(),
                fitted_temperature: None,
                wall_clock_s: started.elapsed().as_secs_f64(),
                snapshots: &snapshot_paths,
            })?;
            Err(e)
        }
        Ok(stats) => {
            let final_path = cfg.output_dir.join("snapshot_final.bin");
            write_snapshot(&state, &final_path)?;
            snapshot_paths.push(final_path);
            // Opportunistic equilibrium readout; fails harmlessly when the
            // final anti-diagonal is not Gaussian-like.
            series.fitted_temperature =
                fit_temperature(&antidiagonal(&state), internal.mass).ok();
            let manifest_path = write_manifest(&ManifestData {
                cfg,
                dekker: dekker.into(),
                oscillator: oscillator.into(),
                trace0,
                status: "completed".into(),
                stats: Some(stats),
                series_rows: series.len(),
                fitted_temperature: series.fitted_temperature,
                wall_clock_s: started.elapsed().as_secs_f64(),
                snapshots: &snapshot_paths,
            })?;
            Ok(RunArtifacts {
                final_state: state,
                series,
                stats,
                series_path,
                manifest_path,
                snapshot_paths,
            })
        }
    }
}
