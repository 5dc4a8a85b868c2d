//! Adaptive Dormand-Prince 5(4) time integration.
//!
//! The driver advances a [`State`] through a caller-supplied right-hand
//! side with embedded fourth-order error control, lands exactly on every
//! requested sample time, and refreshes ghost cells through the supplied
//! boundary closure before each stage evaluation.  The first-same-as-last
//! property keeps the cost at six right-hand-side evaluations per
//! attempted step.

use crate::grid::State;
use crate::Error;
use ndarray::Array3;

// Butcher tableau (Dormand & Prince order 5(4), the RK45 workhorse).
const C: [f64; 7] = [0.0, 0.2, 0.3, 0.8, 8.0 / 9.0, 1.0, 1.0];
const A2: [f64; 1] = [0.2];
const A3: [f64; 2] = [3.0 / 40.0, 9.0 / 40.0];
const A4: [f64; 3] = [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0];
const A5: [f64; 4] = [
    19372.0 / 6561.0,
    -25360.0 / 2187.0,
    64448.0 / 6561.0,
    -212.0 / 729.0,
];
const A6: [f64; 5] = [
    9017.0 / 3168.0,
    -355.0 / 33.0,
    46732.0 / 5247.0,
    49.0 / 176.0,
    -5103.0 / 18656.0,
];
/// Fifth-order weights; the seventh entry is zero, which is what makes the
/// last stage reusable as the first stage of the next step.
const B: [f64; 7] = [
    35.0 / 384.0,
    0.0,
    500.0 / 1113.0,
    125.0 / 192.0,
    -2187.0 / 6784.0,
    11.0 / 84.0,
    0.0,
];
/// Difference between the fifth- and embedded fourth-order weights.
const E: [f64; 7] = [
    71.0 / 57600.0,
    0.0,
    -71.0 / 16695.0,
    71.0 / 1920.0,
    -17253.0 / 339200.0,
    22.0 / 525.0,
    -1.0 / 40.0,
];

/// Tolerances and guard rails for the adaptive loop.
#[derive(Debug, Clone)]
pub struct StepperConfig {
    /// Relative tolerance in the per-entry error weights.
    pub rtol: f64,
    /// Absolute tolerance in the per-entry error weights.
    pub atol: f64,
    /// First attempted step size.
    pub dt_initial: f64,
    /// Runs abort once the controller pushes the step below this.
    pub dt_min: f64,
    /// Runs abort after this many attempted (accepted plus rejected) steps.
    pub max_steps: u64,
}

impl Default for StepperConfig {
    fn default() -> StepperConfig {
        StepperConfig {
            rtol: 1e-8,
            atol: 1e-8,
            dt_initial: 1e-3,
            dt_min: 1e-12,
            max_steps: 50_000_000,
        }
    }
}

impl StepperConfig {
    pub fn validate(&self) -> Result<(), Error> {
        if !(self.rtol > 0.0) || !self.rtol.is_finite() {
            return Err(Error::InvalidParam(format!(
                "rtol must be positive and finite, got {}",
                self.rtol
            )));
        }
        if !(self.atol >= 0.0) || !self.atol.is_finite() {
            return Err(Error::InvalidParam(format!(
                "atol must be non-negative and finite, got {}",
                self.atol
            )));
        }
        if !(self.dt_initial > 0.0) || !self.dt_initial.is_finite() {
            return Err(Error::InvalidParam(format!(
                "dt_initial must be positive and finite, got {}",
                self.dt_initial
            )));
        }
        if !(self.dt_min > 0.0) || !self.dt_min.is_finite() {
            return Err(Error::InvalidParam(format!(
                "dt_min must be positive and finite, got {}",
                self.dt_min
            )));
        }
        if self.max_steps == 0 {
            return Err(Error::InvalidParam("max_steps must be positive".into()));
        }
        Ok(())
    }
}

/// Counters describing one completed integration.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct StepStats {
    pub steps_accepted: u64,
    pub steps_rejected: u64,
    pub rhs_evaluations: u64,
    /// Size of the last accepted step (zero if none was taken).
    pub dt_last: f64,
}

/// `dst = base + dt * sum_j coeffs[j] * k[j]`, elementwise over the full
/// frame.  Zero coefficients are skipped, so trailing zeros in `coeffs`
/// cost nothing.
fn combine(dst: &mut Array3<f64>, base: &Array3<f64>, dt: f64, coeffs: &[f64], k: &[Array3<f64>]) {
    let d = dst.as_slice_mut().expect("standard layout");
    d.copy_from_slice(base.as_slice().expect("standard layout"));
    for (c, kj) in coeffs.iter().zip(k) {
        if *c == 0.0 {
            continue;
        }
        let s = dt * c;
        for (dv, kv) in d.iter_mut().zip(kj.as_slice().expect("standard layout")) {
            *dv += s * kv;
        }
    }
}

/// `dst = dt * sum_j coeffs[j] * k[j]`.
fn weighted_sum(
    dst: &mut Array3<f64>,
    dt: f64,
    coeffs: &[f64],
    k: &[Array3<f64>],
) {
    dst.fill(0.0);
    for (c, kj) in coeffs.iter().zip(k) {
        if *c == 0.0 {
            continue;
        }
        let s = dt * c;
        for (dv, kv) in dst
            .as_slice_mut()
            .expect("standard layout")
            .iter_mut()
            .zip(kj.as_slice().expect("standard layout"))
        {
            *dv += s * kv;
        }
    }
}

/// Weighted root-mean-square error norm over the physical cells.
fn error_norm(state: &State, candidate: &Array3<f64>, err: &Array3<f64>, cfg: &StepperConfig) -> f64 {
    let phys = state.grid.phys_range();
    let mut sum = 0.0;
    let mut count = 0u64;
    for c in 0..2 {
        for ix in phys.clone() {
            for iy in phys.clone() {
                let e = err[[c, ix, iy]];
                let w = cfg.atol
                    + cfg.rtol * state.u[[c, ix, iy]].abs().max(candidate[[c, ix, iy]].abs());
                let r = if e == 0.0 { 0.0 } else { e / w };
                sum += r * r;
                count += 1;
            }
        }
    }
    (sum / count as f64).sqrt()
}

/// Step-size multiplier from the scaled error norm: the classic
/// `0.9 err^(-1/5)`, clamped to `[0.2, 5]`.
fn step_factor(err: f64) -> f64 {
    if err.is_nan() {
        return 0.2;
    }
    (0.9 * err.powf(-0.2)).min(5.0).max(0.2)
}

/// Advances `state` through every sample time in order, invoking
/// `observer` once at the initial time and once per sample time strictly
/// after it (with `state.time` set to the sample time exactly).
///
/// `boundary_fn` runs on every stage vector before `rhs_fn` sees it, so
/// the right-hand side may assume valid ghost cells throughout.  `rhs_fn`
/// receives the stage state and writes the full tendency array.
///
/// Sample times must be finite and strictly increasing; entries at or
/// before the initial time are skipped.
pub fn integrate<BFn, RFn, OFn>(
    state: &mut State,
    cfg: &StepperConfig,
    sample_times: &[f64],
    mut boundary_fn: BFn,
    mut rhs_fn: RFn,
    mut observer: OFn,
) -> Result<StepStats, Error>
where
    BFn: FnMut(&mut State),
    RFn: FnMut(&State, &mut Array3<f64>) -> Result<(), Error>,
    OFn: FnMut(&State) -> Result<(), Error>,
{
    cfg.validate()?;
    if sample_times.iter().any(|t| !t.is_finite()) {
        return Err(Error::InvalidParam("sample times must be finite".into()));
    }
    if sample_times.windows(2).any(|w| !(w[0] < w[1])) {
        return Err(Error::InvalidParam(
            "sample times must be strictly increasing".into(),
        ));
    }

    let grid = state.grid;
    let nt = grid.n_total();
    let mut k: Vec<Array3<f64>> = (0..7).map(|_| Array3::zeros((2, nt, nt))).collect();
    let mut work = State::zeros(grid);
    let mut err_buf = Array3::<f64>::zeros((2, nt, nt));
    let mut stats = StepStats::default();

    boundary_fn(state);
    observer(state)?;
    let mut ti = 0;
    while ti < sample_times.len() && sample_times[ti] <= state.time {
        ti += 1;
    }
    if ti == sample_times.len() {
        return Ok(stats);
    }
    let t_final = *sample_times.last().expect("nonempty");

    rhs_fn(state, &mut k[0])?;
    stats.rhs_evaluations += 1;
    let mut dt = cfg.dt_initial;

    while ti < sample_times.len() {
        let target = sample_times[ti];
        let remaining = target - state.time;
        let (dt_used, clipped) = if dt >= remaining {
            (remaining, true)
        } else {
            (dt, false)
        };
        if !clipped && dt_used < cfg.dt_min {
            return Err(Error::StepSizeUnderflow {
                t: state.time,
                dt: dt_used,
                dt_min: cfg.dt_min,
            });
        }
        if stats.steps_accepted + stats.steps_rejected >= cfg.max_steps {
            return Err(Error::StepLimitExceeded {
                t: state.time,
                t_final,
                max_steps: cfg.max_steps,
            });
        }

        // Stages 2..6 into k[1..5], then the fifth-order candidate whose
        // derivative lands in k[6] (reused as k[0] when accepted).
        let t0 = state.time;
        combine(&mut work.u, &state.u, dt_used, &A2, &k[..1]);
        work.time = t0 + C[1] * dt_used;
        boundary_fn(&mut work);
        rhs_fn(&work, &mut k[1])?;

        combine(&mut work.u, &state.u, dt_used, &A3, &k[..2]);
        work.time = t0 + C[2] * dt_used;
        boundary_fn(&mut work);
        rhs_fn(&work, &mut k[2])?;

        combine(&mut work.u, &state.u, dt_used, &A4, &k[..3]);
        work.time = t0 + C[3] * dt_used;
        boundary_fn(&mut work);
        rhs_fn(&work, &mut k[3])?;

        combine(&mut work.u, &state.u, dt_used, &A5, &k[..4]);
        work.time = t0 + C[4] * dt_used;
        boundary_fn(&mut work);
        rhs_fn(&work, &mut k[4])?;

        combine(&mut work.u, &state.u, dt_used, &A6, &k[..5]);
        work.time = t0 + C[5] * dt_used;
        boundary_fn(&mut work);
        rhs_fn(&work, &mut k[5])?;

        combine(&mut work.u, &state.u, dt_used, &B[..6], &k[..6]);
        work.time = t0 + C[6] * dt_used;
        boundary_fn(&mut work);
        rhs_fn(&work, &mut k[6])?;
        stats.rhs_evaluations += 6;

        weighted_sum(&mut err_buf, dt_used, &E, &k);
        let err = error_norm(state, &work.u, &err_buf, cfg);
        let fac = step_factor(err);

        if err <= 1.0 {
            std::mem::swap(&mut state.u, &mut work.u);
            state.time = if clipped { target } else { t0 + dt_used };
            k.swap(0, 6);
            stats.steps_accepted += 1;
            stats.dt_last = dt_used;
            if clipped {
                observer(state)?;
                ti += 1;
            }
            let candidate_dt = dt_used * fac;
            // A step clipped to land on a sample time says nothing about
            // how large the controller's step could be; keep its memory.
            dt = if clipped { dt.max(candidate_dt) } else { candidate_dt };
        } else {
            stats.steps_rejected += 1;
            dt = dt_used * fac;
        }
    }
    Ok(stats)
}
