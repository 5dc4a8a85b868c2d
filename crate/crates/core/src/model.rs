//! Flux/source decomposition of the position-space Lindblad equation.
//!
//! With `u = (rho_I, rho_R)` the master equation takes the balance-law form
//!
//! ```text
//! du/dt + d/dx f_x(u) + d/dy f_y(u) = d/dx q_x(grad u) + d/dy q_y(grad u) + s(u)
//! ```
//!
//! where the advective fluxes `f` collect the friction and mixed-diffusion
//! drift, the gradient fluxes `q` collect the kinetic (von Neumann) coupling
//! and position diffusion, and the local source `s` carries the potential
//! commutator and momentum-diffusion decoherence.  All coefficients are in
//! internal fm-based units.
//!
//! The x- and y-direction expressions are deliberately written as exact
//! mirror images so that a transpose-symmetric state (Hermitian density
//! matrix) produces a transpose-symmetric tendency down to the last bit.

use crate::units::DCoefficients;
use crate::Error;

/// Flux direction selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
}

/// External potential entering through the commutator source term.
#[derive(Debug, Clone)]
pub enum Potential {
    /// Free motion inside hard walls; `V = 0` everywhere on the grid and
    /// the walls are realized by the boundary policy.
    SquareWell,
    /// `V(x) = m omega^2 x^2 / 2`.
    Harmonic { mass: f64, omega: f64 },
    /// Samples on the physical cell centers of one axis; queries are only
    /// valid at (or extremely near) those centers.
    Tabulated { x0: f64, dx: f64, values: Vec<f64> },
}

impl Potential {
    /// Evaluates the potential at position `x`.
    pub fn eval(&self, x: f64) -> Result<f64, Error> {
        match self {
            Potential::SquareWell => Ok(0.0),
            Potential::Harmonic { mass, omega } => Ok(0.5 * mass * omega * omega * x * x),
            Potential::Tabulated { x0, dx, values } => {
                let pos = (x - x0) / dx;
                let idx = pos.round();
                if (pos - idx).abs() > 1e-6 || idx < 0.0 || idx >= values.len() as f64 {
                    return Err(Error::PotentialOutOfRange { x });
                }
                Ok(values[idx as usize])
            }
        }
    }
}

/// Coefficients and potential of one concrete master equation.
#[derive(Debug, Clone)]
pub struct LindbladModel {
    /// Particle mass, fm^-1.
    pub mass: f64,
    /// Damping rate gamma, fm^-1.
    pub gamma: f64,
    pub coeffs: DCoefficients,
    pub potential: Potential,
}

impl LindbladModel {
    /// Closed-system limit: no damping, no diffusion, only the kinetic
    /// coupling and the potential commutator survive.
    pub fn von_neumann(mass: f64, potential: Potential) -> LindbladModel {
        LindbladModel {
            mass,
            gamma: 0.0,
            coeffs: DCoefficients {
                d_pp: 0.0,
                d_px: 0.0,
                d_xx: 0.0,
            },
            potential,
        }
    }

    /// Advective flux through a surface normal to `axis` at `(x, y)`.
    ///
    /// `u = [rho_I, rho_R]`.
    #[inline]
    pub fn advection_flux(&self, axis: Axis, x: f64, y: f64, u: [f64; 2]) -> [f64; 2] {
        let d = x - y;
        let [i, r] = u;
        let two_dpx = 2.0 * self.coeffs.d_px;
        match axis {
            Axis::X => [
                (-two_dpx * d * r) + (self.gamma * d * i),
                (two_dpx * d * i) + (self.gamma * d * r),
            ],
            Axis::Y => [
                (-two_dpx * d * r) - (self.gamma * d * i),
                (two_dpx * d * i) - (self.gamma * d * r),
            ],
        }
    }

    /// Gradient-driven flux through a surface normal to `axis`.
    ///
    /// `grad_flux` is the derivative of `u` along the flux direction,
    /// `grad_trans` the derivative along the transverse direction; both as
    /// `[d rho_I, d rho_R]`.
    #[inline]
    pub fn diffusion_flux(
        &self,
        axis: Axis,
        grad_flux: [f64; 2],
        grad_trans: [f64; 2],
    ) -> [f64; 2] {
        let inv_2m = 0.5 / self.mass;
        let dxx = self.coeffs.d_xx;
        let [di, dr] = grad_flux;
        let [ti, tr] = grad_trans;
        match axis {
            Axis::X => [
                (dr * inv_2m + dxx * di) + dxx * ti,
                (-di * inv_2m + dxx * dr) + dxx * tr,
            ],
            Axis::Y => [
                (-dr * inv_2m + dxx * di) + dxx * ti,
                (di * inv_2m + dxx * dr) + dxx * tr,
            ],
        }
    }

    /// Local source at `(x, y)` given the potential values `vx = V(x)` and
    /// `vy = V(y)` (pre-evaluated so the hot loop never touches the
    /// potential object).
    #[inline]
    pub fn source_with_potential(
        &self,
        x: f64,
        y: f64,
        vx: f64,
        vy: f64,
        u: [f64; 2],
    ) -> [f64; 2] {
        let d = x - y;
        let damp = 2.0 * self.gamma - self.coeffs.d_pp * (d * d);
        let [i, r] = u;
        [(vy - vx) * r + damp * i, (vx - vy) * i + damp * r]
    }

    /// Local source at `(x, y)`; evaluates the potential at both arguments.
    pub fn source(&self, x: f64, y: f64, u: [f64; 2]) -> Result<[f64; 2], Error> {
        let vx = self.potential.eval(x)?;
        let vy = self.potential.eval(y)?;
        Ok(self.source_with_potential(x, y, vx, vy, u))
    }

    /// Largest absolute eigenvalue of the advective flux Jacobian at
    /// `(x, y)`: `|x - y| sqrt(4 d_px^2 + gamma^2)`, identical for both
    /// axes.
    #[inline]
    pub fn spectral_radius(&self, x: f64, y: f64) -> f64 {
        (x - y).abs() * self.speed_scale()
    }

    /// Position-independent factor of the local wave speed.
    #[inline]
    pub fn speed_scale(&self) -> f64 {
        let dpx = self.coeffs.d_px;
        (4.0 * dpx * dpx + self.gamma * self.gamma).sqrt()
    }
}
