//! Square solution grid, two-component state storage, and ghost cells.
//!
//! The domain is the square `[-L/2, L/2]^2` split into `N x N` uniform cells
//! with centers `x_j = (j + 1/2 - N/2) dx`, `j = 0..N`.  The state carries a
//! two-cell ghost frame on every side so that second-order reconstruction
//! has a full stencil up to and including the wall interfaces.

use crate::Error;
use ndarray::Array3;

/// Number of ghost cells on each side of the physical domain.
pub const GHOST_WIDTH: usize = 2;

/// Component index of the imaginary part of the density matrix.
pub const RHO_I: usize = 0;
/// Component index of the real part of the density matrix.
pub const RHO_R: usize = 1;

/// Uniform square grid over `[-L/2, L/2]^2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    /// Side length `L` of the square domain, fm.
    pub extent_l: f64,
    /// Number of physical cells per axis.
    pub n_cells: usize,
    /// Cell width `dx = L / N`, fm (identical for both axes).
    pub dx: f64,
}

impl Grid {
    /// Builds a grid; requires a positive extent and at least 8 cells so a
    /// limited stencil never spans the whole domain.
    pub fn new(extent_l: f64, n_cells: usize) -> Result<Grid, Error> {
        if !(extent_l > 0.0) || !extent_l.is_finite() {
            return Err(Error::InvalidParam(
                "grid extent must be positive and finite".to_string(),
            ));
        }
        if n_cells < 8 {
            return Err(Error::InvalidParam(format!(
                "grid needs at least 8 cells per axis, got {n_cells}"
            )));
        }
        Ok(Grid {
            extent_l,
            n_cells,
            dx: extent_l / n_cells as f64,
        })
    }

    /// Cells per axis including the ghost frame.
    pub fn n_total(&self) -> usize {
        self.n_cells + 2 * GHOST_WIDTH
    }

    /// Index range of physical cells along either axis of the storage array.
    pub fn phys_range(&self) -> std::ops::Range<usize> {
        GHOST_WIDTH..GHOST_WIDTH + self.n_cells
    }

    /// Center coordinate of the cell at storage index `i` (ghosts included).
    ///
    /// Written so that mirror cells get exactly opposite coordinates, which
    /// keeps the discrete Hermiticity of the scheme bit-exact.
    pub fn cell_center(&self, i: usize) -> f64 {
        let j = i as isize - GHOST_WIDTH as isize;
        (j as f64 + 0.5 - self.n_cells as f64 / 2.0) * self.dx
    }

    /// Coordinate of physical interface `a` (`a = 0` is the left wall,
    /// `a = n_cells` the right wall).
    pub fn interface(&self, a: usize) -> f64 {
        (a as f64 - self.n_cells as f64 / 2.0) * self.dx
    }
}

/// Discrete density matrix: cell averages of the imaginary and real parts
/// on the square grid, plus the ghost frame.
///
/// Storage layout is `u[[component, ix, iy]]` with `component` one of
/// [`RHO_I`], [`RHO_R`]; `ix` indexes the first position argument and `iy`
/// the second.
#[derive(Debug, Clone)]
pub struct State {
    pub grid: Grid,
    pub time: f64,
    pub u: Array3<f64>,
}

impl State {
    /// All-zero state at `t = 0`.
    pub fn zeros(grid: Grid) -> State {
        let n_tot = grid.n_total();
        State {
            grid,
            time: 0.0,
            u: Array3::zeros((2, n_tot, n_tot)),
        }
    }
}

/// How ghost cells are populated from physical cells.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundaryPolicy {
    /// Hard-wall boundary: ghosts mirror the adjacent physical cells with a
    /// sign flip, forcing reconstructed wall values to vanish on average.
    MirrorNegate,
    /// All ghosts zero; suited to confined states that decay well before
    /// the domain edge.
    ZeroGhost,
}

/// Fills the ghost frame of `s` in place according to `policy`.
///
/// Physical cells are never written, so the operation is idempotent.
/// Corner ghosts are filled by mirroring twice (x first, then y).
pub fn apply_boundary(s: &mut State, policy: BoundaryPolicy) {
    let n = s.grid.n_cells;
    let n_tot = s.grid.n_total();
    match policy {
        BoundaryPolicy::MirrorNegate => {
            for c in 0..2 {
                // x-direction ghosts for physical rows.
                for iy in GHOST_WIDTH..GHOST_WIDTH + n {
                    s.u[[c, 1, iy]] = -s.u[[c, 2, iy]];
                    s.u[[c, 0, iy]] = -s.u[[c, 3, iy]];
                    s.u[[c, n + 2, iy]] = -s.u[[c, n + 1, iy]];
                    s.u[[c, n + 3, iy]] = -s.u[[c, n, iy]];
                }
                // y-direction ghosts for every column, corners included.
                for ix in 0..n_tot {
                    s.u[[c, ix, 1]] = -s.u[[c, ix, 2]];
                    s.u[[c, ix, 0]] = -s.u[[c, ix, 3]];
                    s.u[[c, ix, n + 2]] = -s.u[[c, ix, n + 1]];
                    s.u[[c, ix, n + 3]] = -s.u[[c, ix, n]];
                }
            }
        }
        BoundaryPolicy::ZeroGhost => {
            for c in 0..2 {
                for ix in 0..n_tot {
                    let x_is_ghost = ix < GHOST_WIDTH || ix >= GHOST_WIDTH + n;
                    for iy in 0..n_tot {
                        if x_is_ghost || iy < GHOST_WIDTH || iy >= GHOST_WIDTH + n {
                            s.u[[c, ix, iy]] = 0.0;
                        }
                    }
                }
            }
        }
    }
}

/// Initializes a state by sampling `rho0(x, y) -> (re, im)` at the physical
/// cell centers (midpoint initialization of the cell averages).  Ghosts are
/// left zero; apply a [`BoundaryPolicy`] before evaluating fluxes.
pub fn init_from_density<F>(grid: Grid, rho0: F) -> Result<State, Error>
where
    F: Fn(f64, f64) -> (f64, f64),
{
    let mut s = State::zeros(grid);
    for ix in grid.phys_range() {
        let x = grid.cell_center(ix);
        for iy in grid.phys_range() {
            let y = grid.cell_center(iy);
            let (re, im) = rho0(x, y);
            if !re.is_finite() || !im.is_finite() {
                return Err(Error::NonFinite {
                    context: "initial density",
                    ix,
                    iy,
                });
            }
            s.u[[RHO_R, ix, iy]] = re;
            s.u[[RHO_I, ix, iy]] = im;
        }
    }
    Ok(s)
}
