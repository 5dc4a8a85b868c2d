//! Semi-discrete second-order central scheme (Kurganov-Tadmor type).
//!
//! Cell averages are reconstructed to piecewise-linear profiles with the
//! MinMod limiter.  Advective interface fluxes combine the central average
//! of the physical flux with local-wave-speed dissipation; gradient fluxes
//! use a central two-point difference along the flux direction and limited
//! derivatives transverse to it.  The spatial tendency is
//!
//! ```text
//! du/dt = -(Hx_e - Hx_w)/dx - (Hy_n - Hy_s)/dx
//!         +(Px_e - Px_w)/dx + (Py_n - Py_s)/dx + s(u)
//! ```
//!
//! evaluated on physical cells; ghost-cell tendencies are identically zero.
//!
//! Throughout, the x- and y-direction passes are exact mirror images and
//! sums are grouped pairwise, so a Hermitian state yields a Hermitian
//! tendency bit-for-bit.

use crate::grid::{Grid, State, GHOST_WIDTH};
use crate::model::{Axis, LindbladModel};
use crate::Error;
use ndarray::Array3;

/// MinMod slope limiter: the smaller-magnitude argument when both agree in
/// sign, zero otherwise.  Odd under simultaneous sign flip of both
/// arguments, which the discrete Hermiticity of the scheme relies on.
#[inline]
pub fn minmod(a: f64, b: f64) -> f64 {
    if a * b > 0.0 {
        a.signum() * a.abs().min(b.abs())
    } else {
        0.0
    }
}

/// Limited interface values of a cell pair: `(u_minus, u_plus)` at the
/// interface between a left/lower cell and its right/upper neighbor, from
/// the cell averages and limited slopes on both sides.
#[inline]
pub fn reconstruct(
    u_left: f64,
    slope_left: f64,
    u_right: f64,
    slope_right: f64,
    dx: f64,
) -> (f64, f64) {
    let h = 0.5 * dx;
    (u_left + h * slope_left, u_right - h * slope_right)
}

/// Central-upwind advective flux through one interface at `(x, y)` from the
/// reconstructed states on either side.
#[inline]
pub fn advection_numerical_flux(
    model: &LindbladModel,
    axis: Axis,
    x: f64,
    y: f64,
    u_minus: [f64; 2],
    u_plus: [f64; 2],
) -> [f64; 2] {
    let fm = model.advection_flux(axis, x, y, u_minus);
    let fp = model.advection_flux(axis, x, y, u_plus);
    let a = model.spectral_radius(x, y);
    [
        0.5 * (fp[0] + fm[0]) - 0.5 * a * (u_plus[0] - u_minus[0]),
        0.5 * (fp[1] + fm[1]) - 0.5 * a * (u_plus[1] - u_minus[1]),
    ]
}

/// Central gradient flux through one interface: the average of the physical
/// gradient flux evaluated with the shared two-point difference `delta`
/// (along the flux direction) and each neighbor's limited transverse
/// derivative.
#[inline]
pub fn diffusion_numerical_flux(
    model: &LindbladModel,
    axis: Axis,
    delta: [f64; 2],
    trans_minus: [f64; 2],
    trans_plus: [f64; 2],
) -> [f64; 2] {
    let qm = model.diffusion_flux(axis, delta, trans_minus);
    let qp = model.diffusion_flux(axis, delta, trans_plus);
    [0.5 * (qm[0] + qp[0]), 0.5 * (qm[1] + qp[1])]
}

/// Scratch arrays reused across evaluations: limited slopes on the full
/// frame and interface fluxes between/around physical cells.
#[derive(Debug)]
pub struct RhsWorkspace {
    /// Limited d/dx, shape `(2, n_tot, n_tot)`.
    pub sx: Array3<f64>,
    /// Limited d/dy, same shape.
    pub sy: Array3<f64>,
    /// Advective flux through x-interfaces, shape `(2, n + 1, n)`.
    pub hx: Array3<f64>,
    /// Advective flux through y-interfaces, shape `(2, n, n + 1)`.
    pub hy: Array3<f64>,
    /// Gradient flux through x-interfaces, shape of `hx`.
    pub px: Array3<f64>,
    /// Gradient flux through y-interfaces, shape of `hy`.
    pub py: Array3<f64>,
}

impl RhsWorkspace {
    pub fn new(grid: &Grid) -> RhsWorkspace {
        let nt = grid.n_total();
        let n = grid.n_cells;
        RhsWorkspace {
            sx: Array3::zeros((2, nt, nt)),
            sy: Array3::zeros((2, nt, nt)),
            hx: Array3::zeros((2, n + 1, n)),
            hy: Array3::zeros((2, n, n + 1)),
            px: Array3::zeros((2, n + 1, n)),
            py: Array3::zeros((2, n, n + 1)),
        }
    }
}

/// Contiguous row of a `(2, rows, cols)` array.
#[inline]
fn row(a: &Array3<f64>, c: usize, i: usize) -> &[f64] {
    let cols = a.shape()[2];
    let rows = a.shape()[1];
    let s = a.as_slice().expect("standard layout");
    &s[(c * rows + i) * cols..][..cols]
}

/// Two mutable rows (one per component) of a `(2, rows, cols)` array.
#[inline]
fn rows_mut(a: &mut Array3<f64>, i: usize) -> (&mut [f64], &mut [f64]) {
    let cols = a.shape()[2];
    let rows = a.shape()[1];
    let s = a.as_slice_mut().expect("standard layout");
    let (lo, hi) = s.split_at_mut(rows * cols);
    (&mut lo[i * cols..][..cols], &mut hi[i * cols..][..cols])
}

/// Spatial right-hand side of the master equation on a fixed grid.
///
/// Construction pre-evaluates the potential on the physical cell centers so
/// repeated evaluations never touch the [`crate::model::Potential`] object.
#[derive(Debug)]
pub struct KtRhs {
    model: LindbladModel,
    grid: Grid,
    /// Cell-center coordinate per storage index (ghosts included).
    cell_x: Vec<f64>,
    /// Interface coordinate per physical interface index `0..=n`.
    iface_x: Vec<f64>,
    /// Potential at cell centers; ghost entries unused (zero).
    v: Vec<f64>,
    inv_dx: f64,
}

impl KtRhs {
    pub fn new(model: LindbladModel, grid: Grid) -> Result<KtRhs, Error> {
        let nt = grid.n_total();
        let cell_x: Vec<f64> = (0..nt).map(|i| grid.cell_center(i)).collect();
        let iface_x: Vec<f64> = (0..=grid.n_cells).map(|a| grid.interface(a)).collect();
        let mut v = vec![0.0; nt];
        for i in grid.phys_range() {
            v[i] = model.potential.eval(cell_x[i])?;
        }
        Ok(KtRhs {
            model,
            grid,
            cell_x,
            iface_x,
            v,
            inv_dx: 1.0 / grid.dx,
        })
    }

    pub fn model(&self) -> &LindbladModel {
        &self.model
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    /// Fills `ws.sx`/`ws.sy` with MinMod-limited one-sided difference
    /// quotients wherever the three-cell stencil fits.
    pub fn limited_derivatives(&self, s: &State, ws: &mut RhsWorkspace) {
        let nt = self.grid.n_total();
        let inv_dx = self.inv_dx;
        for c in 0..2 {
            for ix in 1..nt - 1 {
                let um = row(&s.u, c, ix - 1);
                let u0 = row(&s.u, c, ix);
                let up = row(&s.u, c, ix + 1);
                let (sx0, sx1) = rows_mut(&mut ws.sx, ix);
                let out = if c == 0 { sx0 } else { sx1 };
                for iy in 0..nt {
                    out[iy] = minmod((up[iy] - u0[iy]) * inv_dx, (u0[iy] - um[iy]) * inv_dx);
                }
            }
            for ix in 0..nt {
                let u0 = row(&s.u, c, ix);
                let (sy0, sy1) = rows_mut(&mut ws.sy, ix);
                let out = if c == 0 { sy0 } else { sy1 };
                for iy in 1..nt - 1 {
                    out[iy] = minmod((u0[iy + 1] - u0[iy]) * inv_dx, (u0[iy] - u0[iy - 1]) * inv_dx);
                }
            }
        }
    }

    /// Computes all interface fluxes (`ws.hx`, `ws.hy`, `ws.px`, `ws.py`)
    /// from the current state; assumes ghosts are filled.
    pub fn compute_fluxes(&self, s: &State, ws: &mut RhsWorkspace) {
        self.limited_derivatives(s, ws);
        let n = self.grid.n_cells;
        let half_dx = 0.5 * self.grid.dx;
        let inv_dx = self.inv_dx;

        // ---- x-direction interfaces: a separates cells ix = a+1, a+2 ----
        for a in 0..=n {
            let xi = self.iface_x[a];
            let (ui_l, ur_l) = (row(&s.u, 0, a + 1), row(&s.u, 1, a + 1));
            let (ui_r, ur_r) = (row(&s.u, 0, a + 2), row(&s.u, 1, a + 2));
            let (si_l, sr_l) = (row(&ws.sx, 0, a + 1), row(&ws.sx, 1, a + 1));
            let (si_r, sr_r) = (row(&ws.sx, 0, a + 2), row(&ws.sx, 1, a + 2));
            let (ti_l, tr_l) = (row(&ws.sy, 0, a + 1), row(&ws.sy, 1, a + 1));
            let (ti_r, tr_r) = (row(&ws.sy, 0, a + 2), row(&ws.sy, 1, a + 2));
            {
                let (hi, hr) = rows_mut(&mut ws.hx, a);
                for k in 0..n {
                    let iy = k + GHOST_WIDTH;
                    let y = self.cell_x[iy];
                    let um = [ui_l[iy] + half_dx * si_l[iy], ur_l[iy] + half_dx * sr_l[iy]];
                    let up = [ui_r[iy] - half_dx * si_r[iy], ur_r[iy] - half_dx * sr_r[iy]];
                    let h = advection_numerical_flux(&self.model, Axis::X, xi, y, um, up);
                    hi[k] = h[0];
                    hr[k] = h[1];
                }
            }
            let (pi, pr) = rows_mut(&mut ws.px, a);
            for k in 0..n {
                let iy = k + GHOST_WIDTH;
                let delta = [
                    (ui_r[iy] - ui_l[iy]) * inv_dx,
                    (ur_r[iy] - ur_l[iy]) * inv_dx,
                ];
                let tm = [ti_l[iy], tr_l[iy]];
                let tp = [ti_r[iy], tr_r[iy]];
                let p = diffusion_numerical_flux(&self.model, Axis::X, delta, tm, tp);
                pi[k] = p[0];
                pr[k] = p[1];
            }
        }

        // ---- y-direction interfaces: b separates cells iy = b+1, b+2 ----
        for j in 0..n {
            let ix = j + GHOST_WIDTH;
            let x = self.cell_x[ix];
            let (ui, ur) = (row(&s.u, 0, ix), row(&s.u, 1, ix));
            let (si, sr) = (row(&ws.sy, 0, ix), row(&ws.sy, 1, ix));
            let (ti, tr) = (row(&ws.sx, 0, ix), row(&ws.sx, 1, ix));
            {
                let (hi, hr) = rows_mut(&mut ws.hy, j);
                for b in 0..=n {
                    let yi = self.iface_x[b];
                    let um = [
                        ui[b + 1] + half_dx * si[b + 1],
                        ur[b + 1] + half_dx * sr[b + 1],
                    ];
                    let up = [
                        ui[b + 2] - half_dx * si[b + 2],
                        ur[b + 2] - half_dx * sr[b + 2],
                    ];
                    let h = advection_numerical_flux(&self.model, Axis::Y, x, yi, um, up);
                    hi[b] = h[0];
                    hr[b] = h[1];
                }
            }
            let (pi, pr) = rows_mut(&mut ws.py, j);
            for b in 0..=n {
                let delta = [
                    (ui[b + 2] - ui[b + 1]) * inv_dx,
                    (ur[b + 2] - ur[b + 1]) * inv_dx,
                ];
                let tm = [ti[b + 1], tr[b + 1]];
                let tp = [ti[b + 2], tr[b + 2]];
                let p = diffusion_numerical_flux(&self.model, Axis::Y, delta, tm, tp);
                pi[b] = p[0];
                pr[b] = p[1];
            }
        }
    }

    /// Flux divergence plus source on physical cells; ghost tendencies are
    /// zero.  Fails if any tendency value is non-finite.
    pub fn assemble(
        &self,
        s: &State,
        ws: &RhsWorkspace,
        out: &mut Array3<f64>,
    ) -> Result<(), Error> {
        let n = self.grid.n_cells;
        let inv_dx = self.inv_dx;
        out.fill(0.0);
        let mut all_finite = true;
        for j in 0..n {
            let ix = j + GHOST_WIDTH;
            let x = self.cell_x[ix];
            let vx = self.v[ix];
            let (ui, ur) = (row(&s.u, 0, ix), row(&s.u, 1, ix));
            let (hxi_w, hxr_w) = (row(&ws.hx, 0, j), row(&ws.hx, 1, j));
            let (hxi_e, hxr_e) = (row(&ws.hx, 0, j + 1), row(&ws.hx, 1, j + 1));
            let (pxi_w, pxr_w) = (row(&ws.px, 0, j), row(&ws.px, 1, j));
            let (pxi_e, pxr_e) = (row(&ws.px, 0, j + 1), row(&ws.px, 1, j + 1));
            let (hyi, hyr) = (row(&ws.hy, 0, j), row(&ws.hy, 1, j));
            let (pyi, pyr) = (row(&ws.py, 0, j), row(&ws.py, 1, j));
            let (oi, or_) = rows_mut(out, ix);
            for k in 0..n {
                let iy = k + GHOST_WIDTH;
                let y = self.cell_x[iy];
                let vy = self.v[iy];
                let adv_i = (hxi_w[k] - hxi_e[k]) * inv_dx + (hyi[k] - hyi[k + 1]) * inv_dx;
                let adv_r = (hxr_w[k] - hxr_e[k]) * inv_dx + (hyr[k] - hyr[k + 1]) * inv_dx;
                let dif_i = (pxi_e[k] - pxi_w[k]) * inv_dx + (pyi[k + 1] - pyi[k]) * inv_dx;
                let dif_r = (pxr_e[k] - pxr_w[k]) * inv_dx + (pyr[k + 1] - pyr[k]) * inv_dx;
                let src = self
                    .model
                    .source_with_potential(x, y, vx, vy, [ui[iy], ur[iy]]);
                let ti = (adv_i + dif_i) + src[0];
                let tr = (adv_r + dif_r) + src[1];
                oi[iy] = ti;
                or_[iy] = tr;
                all_finite &= ti.is_finite() && tr.is_finite();
            }
        }
        if !all_finite {
            for c in 0..2 {
                for ix in self.grid.phys_range() {
                    for iy in self.grid.phys_range() {
                        if !out[[c, ix, iy]].is_finite() {
                            return Err(Error::NonFinite {
                                context: "tendency",
                                ix,
                                iy,
                            });
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Full right-hand side: limited slopes, interface fluxes, divergence
    /// and source.  `out` must have the state's array shape.
    pub fn evaluate(
        &self,
        s: &State,
        ws: &mut RhsWorkspace,
        out: &mut Array3<f64>,
    ) -> Result<(), Error> {
        self.compute_fluxes(s, ws);
        self.assemble(s, ws, out)
    }
}
