//! Initial pure states and the density matrices built from them.
//!
//! Every run starts from a rank-one density matrix rho(x, y) = psi(x)
//! psi(y) with a real wavefunction psi, so the imaginary part starts at
//! zero and builds up only through the dynamics.

use crate::grid::{Grid, State, RHO_R};
use crate::Error;
use std::f64::consts::PI;

/// Real single-particle wavefunctions used as initial data.
///
/// All variants are normalized to unit L2 norm analytically; the discrete
/// trace of the resulting density matrix then deviates from one only by
/// quadrature error.
#[derive(Debug, Clone, PartialEq)]
pub enum Wavefunction {
    /// Eigenstate `n >= 1` of the infinite square well of width `extent_l`
    /// centered at the origin: cosine for odd `n`, sine for even `n`, zero
    /// outside the well.
    BoxEigenstate { n: usize, extent_l: f64 },
    /// Eigenstate `n >= 0` of the harmonic oscillator with the given mass
    /// and angular frequency (both in internal units).
    HarmonicEigenstate { n: usize, mass: f64, omega: f64 },
    /// Normalized Gaussian `(a/pi)^(1/4) exp(-a x^2 / 2)`.
    Gaussian { width_a: f64 },
    /// Constant `1/sqrt(2b)` on `|x| < b`, zero outside.
    Rectangular { half_width: f64 },
}

/// Highest supported oscillator quantum number.  The normalized recurrence
/// used for evaluation stays well-conditioned far beyond the levels any of
/// the shipped scenarios use; the cap just keeps configurations honest.
pub const MAX_OSCILLATOR_LEVEL: usize = 60;

impl Wavefunction {
    pub fn box_eigenstate(n: usize, extent_l: f64) -> Result<Wavefunction, Error> {
        if n == 0 {
            return Err(Error::InvalidParam(
                "box eigenstate index must be at least 1".into(),
            ));
        }
        if !(extent_l > 0.0) || !extent_l.is_finite() {
            return Err(Error::InvalidParam(format!(
                "box extent must be positive and finite, got {extent_l}"
            )));
        }
        Ok(Wavefunction::BoxEigenstate { n, extent_l })
    }

    pub fn harmonic_eigenstate(n: usize, mass: f64, omega: f64) -> Result<Wavefunction, Error> {
        if n > MAX_OSCILLATOR_LEVEL {
            return Err(Error::InvalidParam(format!(
                "oscillator level {n} exceeds the supported maximum {MAX_OSCILLATOR_LEVEL}"
            )));
        }
        if !(mass > 0.0 && omega > 0.0) {
            return Err(Error::InvalidParam(format!(
                "oscillator eigenstate needs positive mass and frequency, got mass {mass}, \
                 omega {omega}"
            )));
        }
        Ok(Wavefunction::HarmonicEigenstate { n, mass, omega })
    }

    pub fn gaussian(width_a: f64) -> Result<Wavefunction, Error> {
        if !(width_a > 0.0) || !width_a.is_finite() {
            return Err(Error::InvalidParam(format!(
                "gaussian width parameter must be positive and finite, got {width_a}"
            )));
        }
        Ok(Wavefunction::Gaussian { width_a })
    }

    pub fn rectangular(half_width: f64) -> Result<Wavefunction, Error> {
        if !(half_width > 0.0) || !half_width.is_finite() {
            return Err(Error::InvalidParam(format!(
                "rectangular half-width must be positive and finite, got {half_width}"
            )));
        }
        Ok(Wavefunction::Rectangular { half_width })
    }

    /// Pointwise evaluation.
    pub fn eval(&self, x: f64) -> f64 {
        match *self {
            Wavefunction::BoxEigenstate { n, extent_l } => {
                if x.abs() > 0.5 * extent_l {
                    return 0.0;
                }
                let k = n as f64 * PI / extent_l;
                let amp = (2.0 / extent_l).sqrt();
                if n % 2 == 1 {
                    amp * (k * x).cos()
                } else {
                    amp * (k * x).sin()
                }
            }
            Wavefunction::HarmonicEigenstate { n, mass, omega } => {
                // Normalized recurrence chi_{k+1} = xi sqrt(2/(k+1)) chi_k
                // - sqrt(k/(k+1)) chi_{k-1} with chi_0 the unit-norm ground
                // state of the dimensionless oscillator; all chi_k stay
                // O(1), so no overflow for any supported level.
                let xi = (mass * omega).sqrt() * x;
                let mut chi_prev = 0.0;
                let mut chi = PI.powf(-0.25) * (-0.5 * xi * xi).exp();
                for k in 0..n {
                    let kf = k as f64;
                    let next =
                        xi * (2.0 / (kf + 1.0)).sqrt() * chi - (kf / (kf + 1.0)).sqrt() * chi_prev;
                    chi_prev = chi;
                    chi = next;
                }
                (mass * omega).powf(0.25) * chi
            }
            Wavefunction::Gaussian { width_a } => {
                (width_a / PI).powf(0.25) * (-0.5 * width_a * x * x).exp()
            }
            Wavefunction::Rectangular { half_width } => {
                if x.abs() < half_width {
                    1.0 / (2.0 * half_width).sqrt()
                } else {
                    0.0
                }
            }
        }
    }
}

/// Density matrix of a real pure state sampled on the physical cells:
/// `rho_R(x, y) = psi(x) psi(y)`, `rho_I = 0`.  Ghost cells stay zero; the
/// boundary policy fills them before the first evaluation.
pub fn from_pure_state(grid: Grid, psi: &Wavefunction) -> Result<State, Error> {
    let vals: Vec<f64> = grid.phys_range().map(|i| psi.eval(grid.cell_center(i))).collect();
    if let Some(bad) = vals.iter().position(|v| !v.is_finite()) {
        return Err(Error::NonFinite {
            context: "initial wavefunction",
            ix: bad + grid.phys_range().start,
            iy: bad + grid.phys_range().start,
        });
    }
    let mut s = State::zeros(grid);
    for (j, &pj) in vals.iter().enumerate() {
        let ix = j + grid.phys_range().start;
        for (k, &pk) in vals.iter().enumerate() {
            let iy = k + grid.phys_range().start;
            s.u[[RHO_R, ix, iy]] = pj * pk;
        }
    }
    Ok(s)
}
