//! Run diagnostics and analytic reference solutions.
//!
//! The solver's conservation quality is tracked through the discrete trace
//! (norm), the mean absolute imaginary part, and the temporal fluctuation
//! of the diagonal.  Long-time runs are checked against closed-form
//! equilibria: a free thermal state for the square well and a Gaussian
//! product form for the damped harmonic oscillator.

use crate::grid::{State, GHOST_WIDTH, RHO_I, RHO_R};
use crate::units::{DCoefficients, HBARC_MEV_FM};
use crate::Error;
use ndarray::Array2;
use std::f64::consts::PI;

/// Aligned time series of the scalar diagnostics recorded during a run.
#[derive(Debug, Clone, Default)]
pub struct DiagnosticsSeries {
    /// Sample times, strictly ascending.
    pub times: Vec<f64>,
    /// Relative norm deviation N(t) at each sample.
    pub norm_dev: Vec<f64>,
    /// Mean absolute imaginary part I(t) at each sample.
    pub imag_violation: Vec<f64>,
    /// Temperature extracted from the final anti-diagonal, if the run
    /// performs the fit.
    pub fitted_temperature: Option<f64>,
}

impl DiagnosticsSeries {
    pub fn push(&mut self, time: f64, norm_dev: f64, imag_violation: f64) -> Result<(), Error> {
        if let Some(&last) = self.times.last() {
            if !(time > last) {
                return Err(Error::Diagnostic(format!(
                    "series times must ascend strictly: {time} after {last}"
                )));
            }
        }
        self.times.push(time);
        self.norm_dev.push(norm_dev);
        self.imag_violation.push(imag_violation);
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }
}

/// Discrete trace: midpoint quadrature of the real part along the main
/// diagonal.
pub fn trace(s: &State) -> f64 {
    let mut sum = 0.0;
    for i in s.grid.phys_range() {
        sum += s.u[[RHO_R, i, i]];
    }
    sum * s.grid.dx
}

/// Relative norm deviation N(t) = trace/trace0 - 1.
pub fn norm_deviation(s: &State, trace0: f64) -> Result<f64, Error> {
    if trace0 == 0.0 {
        return Err(Error::Diagnostic(
            "norm deviation needs a nonzero reference trace".into(),
        ));
    }
    Ok(trace(s) / trace0 - 1.0)
}

/// Mean absolute imaginary part over the physical cells.
pub fn imag_violation(s: &State) -> f64 {
    let n = s.grid.n_cells;
    let mut sum = 0.0;
    for ix in s.grid.phys_range() {
        for iy in s.grid.phys_range() {
            sum += s.u[[RHO_I, ix, iy]].abs();
        }
    }
    sum / (n * n) as f64
}

/// Real part along the main diagonal, physical cells only.
pub fn diagonal(s: &State) -> Vec<f64> {
    s.grid.phys_range().map(|i| s.u[[RHO_R, i, i]]).collect()
}

/// `(x, rho_R(x, -x))` along the secondary diagonal through the domain
/// center.
pub fn antidiagonal(s: &State) -> Vec<(f64, f64)> {
    let n = s.grid.n_cells;
    (0..n)
        .map(|p| {
            let ix = p + GHOST_WIDTH;
            let iy = (n - 1 - p) + GHOST_WIDTH;
            (s.grid.cell_center(ix), s.u[[RHO_R, ix, iy]])
        })
        .collect()
}

/// Per-position standard deviation of the diagonal across snapshots,
/// measured against the first snapshot:
/// `sigma(x_j) = sqrt( (1/N) sum_n (d_n[j] - d_0[j])^2 )` with the
/// baseline included in the count.
pub fn sigma_t(diagonals: &[Vec<f64>]) -> Result<Vec<f64>, Error> {
    if diagonals.len() < 2 {
        return Err(Error::Diagnostic(
            "temporal fluctuation needs at least two snapshots".into(),
        ));
    }
    let m = diagonals[0].len();
    if diagonals.iter().any(|d| d.len() != m) {
        return Err(Error::Diagnostic(
            "snapshot diagonals must share one length".into(),
        ));
    }
    let count = diagonals.len() as f64;
    Ok((0..m)
        .map(|j| {
            let base = diagonals[0][j];
            let sum: f64 = diagonals.iter().map(|d| (d[j] - base).powi(2)).sum();
            (sum / count).sqrt()
        })
        .collect())
}

/// Equilibrium density matrix of a free thermal particle in a box of
/// width `extent_l`: flat diagonal at 1/L, Gaussian decay off the
/// diagonal.
pub fn free_equilibrium(x: f64, y: f64, mass: f64, temperature: f64, extent_l: f64) -> f64 {
    let d = x - y;
    (1.0 / extent_l) * (-(0.5 * mass * temperature) * d * d).exp()
}

/// Equilibrium density matrix of the damped harmonic oscillator: Gaussian
/// in both the center-of-mass coordinate x+y and the relative coordinate
/// x-y.  Requires dissipation (`gamma > 0`) and a positive effective
/// stiffness `d_pp - 4 gamma m d_px`.
pub fn ho_equilibrium(
    x: f64,
    y: f64,
    mass: f64,
    omega: f64,
    gamma: f64,
    coeffs: &DCoefficients,
) -> Result<f64, Error> {
    if !(gamma > 0.0) {
        return Err(Error::InvalidParam(format!(
            "oscillator equilibrium needs positive dissipation, got gamma {gamma}"
        )));
    }
    let den = coeffs.d_pp - 4.0 * gamma * mass * coeffs.d_px;
    if !(den > 0.0) {
        return Err(Error::Diagnostic(format!(
            "oscillator equilibrium undefined: d_pp - 4 gamma m d_px = {den} <= 0"
        )));
    }
    let pref = gamma.sqrt() * mass * omega / (PI * den).sqrt();
    let com = mass * omega * (x + y);
    let rel = x - y;
    Ok(pref * (-gamma * com * com / (4.0 * den) - coeffs.d_pp * rel * rel / (4.0 * gamma)).exp())
}

/// Oscillator frequency shifted by the position-momentum coupling:
/// `omega * sqrt(d_pp / (d_pp - 4 gamma m d_px))`.  Without coupling the
/// frequency is untouched.
pub fn shifted_frequency(
    omega: f64,
    mass: f64,
    gamma: f64,
    coeffs: &DCoefficients,
) -> Result<f64, Error> {
    if coeffs.d_px == 0.0 {
        return Ok(omega);
    }
    let den = coeffs.d_pp - 4.0 * gamma * mass * coeffs.d_px;
    if !(den > 0.0) {
        return Err(Error::Diagnostic(format!(
            "shifted frequency undefined: d_pp - 4 gamma m d_px = {den} <= 0"
        )));
    }
    Ok(omega * (coeffs.d_pp / den).sqrt())
}

/// Temperature (in MeV) extracted from anti-diagonal samples by a
/// log-linear least-squares fit of `rho = A exp(-2 m T x^2)`.
///
/// Only samples above 1e-3 of the peak enter the fit, which suppresses
/// tail noise; each entering sample is weighted by rho^2, the standard
/// variance-stabilizing weight when amplitude data are fitted in log
/// space.  Needs at least five usable samples.
pub fn fit_temperature(samples: &[(f64, f64)], mass: f64) -> Result<f64, Error> {
    let peak = samples.iter().fold(0.0f64, |m, &(_, v)| m.max(v));
    if !(peak > 0.0) {
        return Err(Error::Diagnostic(
            "temperature fit needs positive samples".into(),
        ));
    }
    let cutoff = 1e-3 * peak;
    let usable: Vec<(f64, f64)> = samples
        .iter()
        .filter(|&&(_, v)| v > cutoff)
        .map(|&(x, v)| (x, v))
        .collect();
    if usable.len() < 5 {
        return Err(Error::Diagnostic(format!(
            "temperature fit needs at least 5 usable samples, got {}",
            usable.len()
        )));
    }
    // Weighted least squares of ln(rho) against x^2.
    let (mut sw, mut sz, mut sv, mut szz, mut szv) = (0.0, 0.0, 0.0, 0.0, 0.0);
    for &(x, rho) in &usable {
        let w = rho * rho;
        let z = x * x;
        let v = rho.ln();
        sw += w;
        sz += w * z;
        sv += w * v;
        szz += w * z * z;
        szv += w * z * v;
    }
    let det = sw * szz - sz * sz;
    if det == 0.0 {
        return Err(Error::Diagnostic(
            "temperature fit is degenerate: all samples at one |x|".into(),
        ));
    }
    let slope = (sw * szv - sz * sv) / det;
    let t_internal = -slope / (2.0 * mass);
    Ok(t_internal * HBARC_MEV_FM)
}

/// Pointwise distance to a reference density matrix: complex magnitude of
/// the difference over both components, physical cells only.
pub fn deviation_map<F>(s: &State, oracle: F) -> Array2<f64>
where
    F: Fn(f64, f64) -> (f64, f64),
{
    let n = s.grid.n_cells;
    let mut map = Array2::zeros((n, n));
    for j in 0..n {
        let ix = j + GHOST_WIDTH;
        let x = s.grid.cell_center(ix);
        for k in 0..n {
            let iy = k + GHOST_WIDTH;
            let y = s.grid.cell_center(iy);
            let (re, im) = oracle(x, y);
            map[[j, k]] =
                (s.u[[RHO_R, ix, iy]] - re).hypot(s.u[[RHO_I, ix, iy]] - im);
        }
    }
    map
}

/// Decay rate from a monotonically non-increasing positive series: minus
/// the slope of the log-linear fit of the magnitudes against time.
pub fn offdiagonal_decay_rate(times: &[f64], values: &[f64]) -> Result<f64, Error> {
    if times.len() != values.len() || times.len() < 2 {
        return Err(Error::Diagnostic(
            "decay fit needs matching series of at least two points".into(),
        ));
    }
    if times.windows(2).any(|w| !(w[0] < w[1])) {
        return Err(Error::Diagnostic("decay fit times must ascend".into()));
    }
    if values.iter().any(|&v| !(v > 0.0)) {
        return Err(Error::Diagnostic(
            "decay fit needs strictly positive magnitudes".into(),
        ));
    }
    if values.windows(2).any(|w| w[1] > w[0]) {
        return Err(Error::Diagnostic(
            "series is not monotonically decaying; no exponential rate to extract".into(),
        ));
    }
    let n = times.len() as f64;
    let tbar = times.iter().sum::<f64>() / n;
    let lbar = values.iter().map(|v| v.ln()).sum::<f64>() / n;
    let mut num = 0.0;
    let mut den = 0.0;
    for (&t, &v) in times.iter().zip(values) {
        num += (t - tbar) * (v.ln() - lbar);
        den += (t - tbar) * (t - tbar);
    }
    Ok(-(num / den))
}

/// Local source-term decay rate of an off-diagonal probe at `(x, y)`:
/// `4 d_pp r^2 - 2 gamma` with `r = (x - y)/2`.
pub fn source_decay_rate(d_pp: f64, gamma: f64, x: f64, y: f64) -> f64 {
    let r = 0.5 * (x - y);
    4.0 * d_pp * r * r - 2.0 * gamma
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::Grid;
    use crate::initial::{from_pure_state, Wavefunction};
    use crate::units::{derive_coefficients, DxxMode, PhysicalParams};
    use approx::assert_relative_eq;

    fn paper_bath(gamma: f64, dxx_mode: DxxMode) -> (f64, f64, f64, DCoefficients) {
        let p = PhysicalParams {
            mass_mev: 470.0,
            temperature_mev: 300.0,
            gamma_cfm: gamma,
            omega_cutoff_mev: 1200.0,
            osc_omega_cfm: 0.5,
            dxx_mode,
        };
        let i = p.to_internal();
        let c = derive_coefficients(&i);
        (i.mass, i.temperature, i.osc_omega, c)
    }

    #[test]
    fn trace_of_uniform_diagonal_is_exactly_one() {
        let grid = Grid::new(32.0, 64).unwrap();
        let mut s = State::zeros(grid);
        for i in grid.phys_range() {
            s.u[[RHO_R, i, i]] = 1.0 / 32.0;
        }
        assert_eq!(trace(&s), 1.0);
        assert_eq!(trace(&State::zeros(grid)), 0.0);
    }

    #[test]
    fn trace_of_box_ground_state_is_one_to_quadrature_accuracy() {
        let grid = Grid::new(40.0, 500).unwrap();
        let psi = Wavefunction::box_eigenstate(1, 40.0).unwrap();
        let s = from_pure_state(grid, &psi).unwrap();
        assert!((trace(&s) - 1.0).abs() <= 2e-3);
    }

    #[test]
    fn trace_is_linear_in_the_state() {
        let grid = Grid::new(20.0, 32).unwrap();
        let mut s = State::zeros(grid);
        for i in grid.phys_range() {
            s.u[[RHO_R, i, i]] = (i as f64 * 0.37).sin();
        }
        let t1 = trace(&s);
        s.u.mapv_inplace(|v| 3.0 * v);
        assert_relative_eq!(trace(&s), 3.0 * t1, max_relative = 1e-14);
    }

    #[test]
    fn norm_deviation_is_a_relative_measure() {
        let grid = Grid::new(32.0, 64).unwrap();
        let mut s = State::zeros(grid);
        for i in grid.phys_range() {
            s.u[[RHO_R, i, i]] = 1.0 / 32.0;
        }
        let t0 = trace(&s);
        assert_eq!(norm_deviation(&s, t0).unwrap(), 0.0);
        s.u.mapv_inplace(|v| 0.5 * v);
        assert_relative_eq!(norm_deviation(&s, t0).unwrap(), -0.5, max_relative = 1e-14);
        assert!(norm_deviation(&s, 0.0).is_err());
    }

    #[test]
    fn imag_violation_averages_over_all_physical_cells() {
        let grid = Grid::new(10.0, 10).unwrap();
        let mut s = State::zeros(grid);
        assert_eq!(imag_violation(&s), 0.0);
        s.u[[RHO_I, 4, 7]] = -0.3;
        assert_eq!(imag_violation(&s), 0.3 / 100.0);
    }

    #[test]
    fn diagonal_and_antidiagonal_read_the_expected_cells() {
        let grid = Grid::new(10.0, 10).unwrap();
        let mut s = State::zeros(grid);
        for ix in grid.phys_range() {
            for iy in grid.phys_range() {
                s.u[[RHO_R, ix, iy]] = (ix * 100 + iy) as f64;
            }
        }
        let d = diagonal(&s);
        assert_eq!(d.len(), 10);
        assert_eq!(d[0], 202.0);
        assert_eq!(d[9], 1111.0);
        let a = antidiagonal(&s);
        assert_eq!(a.len(), 10);
        // First anti-diagonal entry pairs the leftmost cell with the
        // rightmost: storage (2, 11).
        assert_eq!(a[0].1, 211.0);
        assert_eq!(a[9].1, 1102.0);
        // Its x-coordinates mirror exactly through zero.
        for (p, &(x, _)) in a.iter().enumerate() {
            assert_eq!(x, grid.cell_center(p + GHOST_WIDTH));
            assert_eq!(-x, grid.cell_center((10 - 1 - p) + GHOST_WIDTH));
        }
    }

    #[test]
    fn sigma_t_matches_the_two_snapshot_hand_value() {
        let base = vec![0.2, 0.4, 0.6];
        let same = sigma_t(&[base.clone(), base.clone()]).unwrap();
        assert!(same.iter().all(|&v| v == 0.0));

        let mut shifted = base.clone();
        shifted[1] += 0.4;
        let sig = sigma_t(&[base.clone(), shifted]).unwrap();
        assert_eq!(sig[0], 0.0);
        assert_relative_eq!(
            sig[1],
            0.4 / std::f64::consts::SQRT_2,
            max_relative = 1e-15
        );
        assert_eq!(sig[2], 0.0);

        assert!(sigma_t(&[base.clone()]).is_err());
        assert!(sigma_t(&[base, vec![0.0; 2]]).is_err());
    }

    #[test]
    fn free_equilibrium_is_flat_on_the_diagonal_and_gaussian_off_it() {
        let (mass, temperature, _, _) = paper_bath(0.5, DxxMode::Zero);
        assert_eq!(free_equilibrium(3.3, 3.3, mass, temperature, 40.0), 1.0 / 40.0);
        assert_relative_eq!(
            free_equilibrium(1.0, -1.0, mass, temperature, 40.0),
            1.789_169_822_696_132_3e-5,
            max_relative = 1e-12
        );
    }

    #[test]
    fn oscillator_equilibrium_peak_matches_the_closed_form() {
        let (mass, _, omega, coeffs) = paper_bath(0.5, DxxMode::Zero);
        let peak = ho_equilibrium(0.0, 0.0, mass, omega, 0.5, &coeffs).unwrap();
        assert_relative_eq!(peak, 0.231_371_558_741_109_55, max_relative = 1e-12);
    }

    #[test]
    fn oscillator_equilibrium_antidiagonal_shares_the_free_width() {
        let (mass, temperature, omega, coeffs) = paper_bath(0.5, DxxMode::Zero);
        let peak = ho_equilibrium(0.0, 0.0, mass, omega, 0.5, &coeffs).unwrap();
        for &x in &[0.3, 0.9, 1.7] {
            let v = ho_equilibrium(x, -x, mass, omega, 0.5, &coeffs).unwrap();
            let expect = peak * (-2.0 * mass * temperature * x * x).exp();
            assert_relative_eq!(v, expect, max_relative = 1e-12);
        }
    }

    #[test]
    fn oscillator_equilibrium_diagonal_integrates_to_one_with_expected_variance() {
        let (mass, temperature, omega, coeffs) = paper_bath(0.5, DxxMode::Zero);
        let n_quad = 40_000;
        let span = 40.0;
        let dx = span / n_quad as f64;
        let (mut norm, mut second) = (0.0, 0.0);
        for q in 0..n_quad {
            let x = -0.5 * span + (q as f64 + 0.5) * dx;
            let v = ho_equilibrium(x, x, mass, omega, 0.5, &coeffs).unwrap();
            norm += v * dx;
            second += x * x * v * dx;
        }
        assert_relative_eq!(norm, 1.0, epsilon = 1e-6);
        // Variance of the diagonal Gaussian: T (1 + 2 gamma / Omega) / (m omega^2).
        let omega_cut = 4.0 * temperature;
        let expect = temperature * (1.0 + 2.0 * 0.5 / omega_cut) / (mass * omega * omega);
        assert_relative_eq!(second / norm, expect, max_relative = 1e-6);
        assert_relative_eq!(expect, 2.973_036_128_510_638, max_relative = 1e-12);
    }

    #[test]
    fn oscillator_equilibrium_rejects_unphysical_sets() {
        let coeffs = DCoefficients {
            d_pp: 1.0,
            d_px: 0.3,
            d_xx: 0.0,
        };
        // 4 gamma m d_px = 2.4 > d_pp.
        assert!(ho_equilibrium(0.0, 0.0, 2.0, 0.5, 1.0, &coeffs).is_err());
        assert!(ho_equilibrium(0.0, 0.0, 2.0, 0.5, 0.0, &coeffs).is_err());
    }

    #[test]
    fn shifted_frequency_reduces_to_omega_without_coupling() {
        let no_coupling = DCoefficients {
            d_pp: 2.0,
            d_px: 0.0,
            d_xx: 0.0,
        };
        assert_eq!(shifted_frequency(0.5, 2.4, 0.5, &no_coupling).unwrap(), 0.5);
        // Zero dissipation derives zero coupling, so the same branch holds.
        let vn = DCoefficients {
            d_pp: 0.0,
            d_px: 0.0,
            d_xx: 0.0,
        };
        assert_eq!(shifted_frequency(0.5, 2.4, 0.0, &vn).unwrap(), 0.5);
    }

    #[test]
    fn shifted_frequency_matches_the_cutoff_form() {
        let (mass, temperature, omega, coeffs) = paper_bath(0.5, DxxMode::Zero);
        let shifted = shifted_frequency(omega, mass, 0.5, &coeffs).unwrap();
        assert_relative_eq!(shifted, 0.463_352_600_721_834_3, max_relative = 1e-12);
        // Equivalent closed form omega / sqrt(1 + 2 gamma / Omega).
        let alt = omega / (1.0 + 2.0 * 0.5 / (4.0 * temperature)).sqrt();
        assert_relative_eq!(shifted, alt, max_relative = 1e-14);
    }

    #[test]
    fn temperature_fit_recovers_the_generating_width() {
        let (mass, temperature, _, _) = paper_bath(0.5, DxxMode::Zero);
        let samples: Vec<(f64, f64)> = (0..41)
            .map(|i| {
                let x = -2.0 + i as f64 * 0.1;
                (x, 0.2317 * (-2.0 * mass * temperature * x * x).exp())
            })
            .collect();
        let t = fit_temperature(&samples, mass).unwrap();
        assert_relative_eq!(t, 300.0, max_relative = 1e-10);

        // Amplitude is a free parameter: doubling it leaves T unchanged.
        let doubled: Vec<(f64, f64)> = samples.iter().map(|&(x, v)| (x, 2.0 * v)).collect();
        assert_relative_eq!(fit_temperature(&doubled, mass).unwrap(), t, max_relative = 1e-10);
    }

    #[test]
    fn temperature_fit_requires_five_samples_above_the_cutoff() {
        let (mass, temperature, _, _) = paper_bath(0.5, DxxMode::Zero);
        let few: Vec<(f64, f64)> = (0..4)
            .map(|i| {
                let x = i as f64 * 0.1;
                (x, (-2.0 * mass * temperature * x * x).exp())
            })
            .collect();
        assert!(fit_temperature(&few, mass).is_err());

        // Plenty of samples, but all except four sit under the 1e-3 cutoff.
        let mut tail_heavy: Vec<(f64, f64)> = (0..4).map(|i| (i as f64 * 0.1, 1.0)).collect();
        tail_heavy.extend((0..20).map(|i| (3.0 + i as f64 * 0.1, 1e-5)));
        assert!(fit_temperature(&tail_heavy, mass).is_err());
        assert!(fit_temperature(&[(0.0, 0.0), (1.0, 0.0)], mass).is_err());
    }

    #[test]
    fn deviation_map_vanishes_against_itself_and_sees_offsets() {
        let grid = Grid::new(20.0, 24).unwrap();
        let field = |x: f64, y: f64| ((-(x * x + y * y) / 8.0).exp(), 0.01 * (x - y));
        let mut s = State::zeros(grid);
        for ix in grid.phys_range() {
            for iy in grid.phys_range() {
                let (re, im) = field(grid.cell_center(ix), grid.cell_center(iy));
                s.u[[RHO_R, ix, iy]] = re;
                s.u[[RHO_I, ix, iy]] = im;
            }
        }
        let map = deviation_map(&s, field);
        assert!(map.iter().all(|&v| v == 0.0));

        let offset = deviation_map(&s, |x, y| {
            let (re, im) = field(x, y);
            (re + 0.25, im)
        });
        assert!(offset.iter().all(|&v| (v - 0.25).abs() < 1e-12));
    }

    #[test]
    fn decay_rate_fit_recovers_synthetic_exponentials() {
        let rate = 0.8;
        let times: Vec<f64> = (0..30).map(|i| i as f64 * 0.25).collect();
        let values: Vec<f64> = times.iter().map(|&t| 0.7 * (-rate * t).exp()).collect();
        let fitted = offdiagonal_decay_rate(&times, &values).unwrap();
        assert_relative_eq!(fitted, rate, max_relative = 1e-12);

        // A constant series has no decay trend.
        let flat = vec![0.5; 30];
        assert_relative_eq!(
            offdiagonal_decay_rate(&times, &flat).unwrap(),
            0.0,
            epsilon = 1e-14
        );

        // Non-monotone input is rejected rather than silently fitted.
        let mut wobble = values.clone();
        wobble[10] = wobble[9] * 1.5;
        assert!(offdiagonal_decay_rate(&times, &wobble).is_err());
        assert!(offdiagonal_decay_rate(&times[..1], &values[..1]).is_err());
        assert!(offdiagonal_decay_rate(&[0.0, 1.0], &[1.0, -0.5]).is_err());
    }

    #[test]
    fn source_decay_rate_matches_the_coefficient_arithmetic() {
        let (_, _, _, coeffs) = paper_bath(0.5, DxxMode::Zero);
        // Probe two units off the diagonal: r = 1.
        assert_relative_eq!(
            source_decay_rate(coeffs.d_pp, 0.5, 1.0, -1.0),
            13.484_588_569_577_985,
            max_relative = 1e-14
        );
        // On the diagonal only the gain term survives.
        assert_eq!(source_decay_rate(coeffs.d_pp, 0.5, 2.0, 2.0), -1.0);
    }

    #[test]
    fn series_enforces_ascending_times() {
        let mut series = DiagnosticsSeries::default();
        series.push(0.0, 0.0, 0.0).unwrap();
        series.push(0.5, 1e-6, 1e-9).unwrap();
        assert!(series.push(0.5, 0.0, 0.0).is_err());
        assert!(series.push(0.2, 0.0, 0.0).is_err());
        assert_eq!(series.len(), 2);
        assert!(!series.is_empty());
    }
}
