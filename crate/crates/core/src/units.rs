//! Natural units (`hbar = k_B = c = 1`) and master-equation coefficients.
//!
//! All solver-internal quantities are expressed in powers of the femtometre:
//! energies, temperatures, masses and rates are `fm^-1`, lengths are `fm`,
//! times are `fm/c` (numerically equal to `fm`).  User-facing inputs arrive
//! in MeV / fm / c/fm and are converted once on the way in.

use crate::Error;

/// Conversion constant `hbar c` in MeV fm.
pub const HBARC_MEV_FM: f64 = 197.326_980_4;

/// Units accepted at the configuration boundary.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Unit {
    /// Energy-like: MeV values divide by `hbar c` to become `fm^-1`.
    MeV,
    /// Lengths in fm pass through unchanged.
    Fm,
    /// Rates in c/fm are already `fm^-1`.
    CPerFm,
    /// Times in fm/c are already `fm`.
    FmPerC,
}

/// Converts a physical input value to internal `fm`-based units.
pub fn to_internal(value: f64, unit: Unit) -> f64 {
    match unit {
        Unit::MeV => value / HBARC_MEV_FM,
        Unit::Fm | Unit::CPerFm | Unit::FmPerC => value,
    }
}

/// Inverse of [`to_internal`].
pub fn from_internal(value: f64, unit: Unit) -> f64 {
    match unit {
        Unit::MeV => value * HBARC_MEV_FM,
        Unit::Fm | Unit::CPerFm | Unit::FmPerC => value,
    }
}

/// Choice for the position-diffusion coefficient `D_xx`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DxxMode {
    /// `D_xx = 0`: the minimal master equation.
    #[default]
    Zero,
    /// `D_xx = gamma / (6 m T)`: the thermal value that completes the
    /// diffusion matrix.
    Thermal,
}

/// Physical inputs in user units (MeV, fm, c/fm).
#[derive(Debug, Clone, Copy)]
pub struct PhysicalParams {
    pub mass_mev: f64,
    pub temperature_mev: f64,
    /// Classical damping rate `gamma` in c/fm.
    pub gamma_cfm: f64,
    /// Environment cutoff `Omega` in MeV.
    pub omega_cutoff_mev: f64,
    /// External oscillator frequency `omega` in c/fm; zero where no
    /// harmonic potential is present.
    pub osc_omega_cfm: f64,
    pub dxx_mode: DxxMode,
}

impl PhysicalParams {
    /// Validates positivity requirements; collects nothing, fails fast.
    pub fn validate(&self) -> Result<(), Error> {
        let bad = |msg: &str| Err(Error::InvalidParam(msg.to_string()));
        if !(self.mass_mev > 0.0) || !self.mass_mev.is_finite() {
            return bad("mass_mev must be positive and finite");
        }
        if !(self.temperature_mev > 0.0) || !self.temperature_mev.is_finite() {
            return bad("temperature_mev must be positive and finite");
        }
        if !(self.gamma_cfm >= 0.0) || !self.gamma_cfm.is_finite() {
            return bad("gamma_cfm must be non-negative and finite");
        }
        if !(self.omega_cutoff_mev > 0.0) || !self.omega_cutoff_mev.is_finite() {
            return bad("omega_cutoff_mev must be positive and finite");
        }
        if !(self.osc_omega_cfm >= 0.0) || !self.osc_omega_cfm.is_finite() {
            return bad("osc_omega_cfm must be non-negative and finite");
        }
        Ok(())
    }

    /// Converts all fields to internal units.
    pub fn to_internal(&self) -> InternalParams {
        InternalParams {
            mass: to_internal(self.mass_mev, Unit::MeV),
            temperature: to_internal(self.temperature_mev, Unit::MeV),
            gamma: to_internal(self.gamma_cfm, Unit::CPerFm),
            omega_cutoff: to_internal(self.omega_cutoff_mev, Unit::MeV),
            osc_omega: to_internal(self.osc_omega_cfm, Unit::CPerFm),
            dxx_mode: self.dxx_mode,
        }
    }
}

/// Physical parameters in internal units (everything `fm`-based).
#[derive(Debug, Clone, Copy)]
pub struct InternalParams {
    pub mass: f64,
    pub temperature: f64,
    pub gamma: f64,
    pub omega_cutoff: f64,
    pub osc_omega: f64,
    pub dxx_mode: DxxMode,
}

/// Diffusion/drift coefficients of the master equation, internal units:
/// `d_pp` in fm^-3, `d_px` dimensionless, `d_xx` in fm.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DCoefficients {
    pub d_pp: f64,
    pub d_px: f64,
    pub d_xx: f64,
}

/// Derives the coefficient set from damping rate, mass, temperature and
/// cutoff:
///
/// `D_pp = 2 gamma m T`, `D_px = -gamma T / Omega`, and `D_xx` either zero
/// or the thermal value `gamma / (6 m T)`.
pub fn derive_coefficients(p: &InternalParams) -> DCoefficients {
    let d_pp = 2.0 * p.gamma * p.mass * p.temperature;
    let d_px = -p.gamma * p.temperature / p.omega_cutoff;
    let d_xx = match p.dxx_mode {
        DxxMode::Zero => 0.0,
        DxxMode::Thermal => p.gamma / (6.0 * p.mass * p.temperature),
    };
    DCoefficients { d_pp, d_px, d_xx }
}

/// Outcome of a positivity/validity constraint check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstraintStatus {
    Satisfied,
    Violated,
    /// The inequality does not constrain this coefficient set.
    NotApplicable,
}

/// Checks the complete-positivity (Dekker) inequality
/// `D_pp D_xx - D_px^2 >= gamma^2 / 4`.
///
/// The inequality only constrains master equations with a position-diffusion
/// term; for `d_xx == 0` it reports [`ConstraintStatus::NotApplicable`].
pub fn check_dekker(c: &DCoefficients, gamma: f64) -> ConstraintStatus {
    if c.d_xx == 0.0 {
        return ConstraintStatus::NotApplicable;
    }
    if c.d_pp * c.d_xx - c.d_px * c.d_px >= gamma * gamma / 4.0 {
        ConstraintStatus::Satisfied
    } else {
        ConstraintStatus::Violated
    }
}

/// Checks the oscillator validity condition
/// `(D_pp^2 - 4 gamma m D_pp D_px) / (gamma^2 m^2 omega^2) >= 1`.
///
/// Fails for `omega <= 0` (no oscillator to constrain).
pub fn check_harmonic_condition(
    c: &DCoefficients,
    mass: f64,
    osc_omega: f64,
    gamma: f64,
) -> Result<ConstraintStatus, Error> {
    if !(osc_omega > 0.0) {
        return Err(Error::InvalidParam(
            "harmonic validity condition requires osc_omega > 0".to_string(),
        ));
    }
    let numerator = c.d_pp * c.d_pp - 4.0 * gamma * mass * c.d_pp * c.d_px;
    let denominator = gamma * gamma * mass * mass * osc_omega * osc_omega;
    if numerator / denominator >= 1.0 {
        Ok(ConstraintStatus::Satisfied)
    } else {
        Ok(ConstraintStatus::Violated)
    }
}
