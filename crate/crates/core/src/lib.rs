//! Finite-volume solver for the position-space Lindblad master equation of a
//! one-dimensional open quantum system coupled to a thermal environment.
//!
//! The density matrix `rho(x, y, t)` is evolved on a uniform 2D grid with a
//! semi-discrete central (Kurganov-Tadmor) scheme: the imaginary and real
//! parts form a two-component field whose dynamics split into advective
//! fluxes, gradient-driven fluxes, and a local source.  Time stepping is an
//! adaptive embedded Dormand-Prince 5(4) Runge-Kutta method.
//!
//! Modules:
//! - [`units`]: natural-unit conversions and master-equation coefficients
//! - [`grid`]: square grid, state storage, ghost-cell boundary policies
//! - [`model`]: fluxes, sources, potentials, local wave speeds
//! - [`scheme`]: MUSCL reconstruction with MinMod limiting and flux assembly
//! - [`integrator`]: adaptive Dormand-Prince 5(4) time integration
//! - [`initial`]: initial wavefunctions and pure-state density matrices
//! - [`diagnostics`]: norm/imaginary-part monitors, equilibria, fits
//! - [`config`], [`snapshot`], [`runner`]: config-driven runs and artifacts

pub mod config;
pub mod diagnostics;
pub mod grid;
pub mod initial;
pub mod integrator;
pub mod model;
pub mod runner;
pub mod scheme;
pub mod snapshot;
pub mod units;

use thiserror::Error;

/// Solver-level failures.  Configuration-file problems use
/// [`config::ConfigError`] instead so the CLI can distinguish the two.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParam(String),

    #[error("potential is not defined at x = {x}")]
    PotentialOutOfRange { x: f64 },

    #[error("non-finite {context} at cell ({ix}, {iy})")]
    NonFinite {
        context: &'static str,
        ix: usize,
        iy: usize,
    },

    #[error("step size underflow at t = {t}: dt = {dt:e} fell below dt_min = {dt_min:e}")]
    StepSizeUnderflow { t: f64, dt: f64, dt_min: f64 },

    #[error("step limit exceeded: {max_steps} steps reached at t = {t} of {t_final}")]
    StepLimitExceeded { t: f64, t_final: f64, max_steps: u64 },

    #[error("diagnostic failure: {0}")]
    Diagnostic(String),

    #[error("snapshot format: {0}")]
    SnapshotFormat(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
