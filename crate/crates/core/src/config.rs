//! Run configuration: flat `key = value` text files with dotted keys.
//!
//! The format is deliberately plain: one assignment per line, `#` starts
//! a comment (full-line or trailing), lists are comma-separated.  All
//! physical inputs use MeV / fm / c/fm.  Loading validates everything at
//! once and reports the complete list of violations rather than stopping
//! at the first, so a config can be fixed in one pass.
//!
//! ```text
//! grid.extent_l   = 40.0        # fm
//! grid.n_cells    = 200
//! physics.mass_mev        = 470.0
//! physics.temperature_mev = 300.0
//! physics.gamma_cfm       = 0.5
//! potential.kind  = square_well
//! initial.kind    = box_eigenstate
//! initial.n       = 1
//! run.t_final     = 30.0       # fm/c
//! ```
//!
//! Omitted keys fall back to documented defaults; notably the bath cutoff
//! defaults to four times the temperature and the boundary policy follows
//! the potential (walled domains mirror-negate, open ones zero the ghost
//! frame).

use crate::grid::BoundaryPolicy;
use crate::integrator::StepperConfig;
use crate::units::{DxxMode, PhysicalParams};
use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};

/// All violations found while loading a configuration.
#[derive(Debug)]
pub struct ConfigError {
    pub violations: Vec<String>,
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "configuration invalid ({} problem(s)):", self.violations.len())?;
        for v in &self.violations {
            writeln!(f, "  - {v}")?;
        }
        Ok(())
    }
}

impl std::error::Error for ConfigError {}

/// Shape of the external potential.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PotentialKind {
    /// Infinite square well: zero inside, walls realized by the boundary
    /// policy.
    SquareWell,
    /// Harmonic potential using the configured mass and oscillator
    /// frequency.
    Harmonic,
}

/// Which pure state the run starts from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum InitialSpec {
    /// Square-well eigenstate `n >= 1` spanning the full domain.
    BoxEigenstate { n: usize },
    /// Oscillator eigenstate `n >= 0` for the configured mass/frequency.
    HarmonicEigenstate { n: usize },
    /// Gaussian with width parameter `a` (fm^-2).
    Gaussian { width_a: f64 },
    /// Rectangular packet with half-width `b` (fm).
    Rectangular { half_width: f64 },
}

/// Fully resolved run configuration (defaults applied, everything
/// validated).
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub extent_l: f64,
    pub n_cells: usize,
    pub physics: PhysicalParams,
    pub potential: PotentialKind,
    pub initial: InitialSpec,
    pub stepper: StepperConfig,
    pub boundary: BoundaryPolicy,
    pub t_final: f64,
    pub output_dir: PathBuf,
    /// Spacing of series samples in fm/c; zero records only the start and
    /// end times.
    pub series_stride: f64,
    /// Times at which full snapshots are written (sorted, deduplicated).
    pub snapshot_times: Vec<f64>,
}

impl RunConfig {
    /// Every configuration key with its final (post-default) value, in
    /// stable order — this is what the run manifest records.
    pub fn resolved_entries(&self) -> Vec<(String, String)> {
        let initial_entries: Vec<(String, String)> = match self.initial {
            InitialSpec::BoxEigenstate { n } => vec![
                ("initial.kind".into(), "box_eigenstate".into()),
                ("initial.n".into(), n.to_string()),
            ],
            InitialSpec::HarmonicEigenstate { n } => vec![
                ("initial.kind".into(), "harmonic_eigenstate".into()),
                ("initial.n".into(), n.to_string()),
            ],
            InitialSpec::Gaussian { width_a } => vec![
                ("initial.kind".into(), "gaussian".into()),
                ("initial.width_a".into(), width_a.to_string()),
            ],
            InitialSpec::Rectangular { half_width } => vec![
                ("initial.kind".into(), "rectangular".into()),
                ("initial.half_width".into(), half_width.to_string()),
            ],
        };
        let mut out = vec![
            ("grid.extent_l".into(), self.extent_l.to_string()),
            ("grid.n_cells".into(), self.n_cells.to_string()),
            ("physics.mass_mev".into(), self.physics.mass_mev.to_string()),
            (
                "physics.temperature_mev".into(),
                self.physics.temperature_mev.to_string(),
            ),
            ("physics.gamma_cfm".into(), self.physics.gamma_cfm.to_string()),
            (
                "physics.omega_cutoff_mev".into(),
                self.physics.omega_cutoff_mev.to_string(),
            ),
            (
                "physics.osc_omega_cfm".into(),
                self.physics.osc_omega_cfm.to_string(),
            ),
            (
                "physics.dxx".into(),
                match self.physics.dxx_mode {
                    DxxMode::Zero => "zero".into(),
                    DxxMode::Thermal => "thermal".into(),
                },
            ),
            (
                "potential.kind".into(),
                match self.potential {
                    PotentialKind::SquareWell => "square_well".into(),
                    PotentialKind::Harmonic => "harmonic".into(),
                },
            ),
        ];
        out.extend(initial_entries);
        out.extend([
            ("integrator.rtol".into(), self.stepper.rtol.to_string()),
            ("integrator.atol".into(), self.stepper.atol.to_string()),
            (
                "integrator.dt_initial".into(),
                self.stepper.dt_initial.to_string(),
            ),
            ("integrator.dt_min".into(), self.stepper.dt_min.to_string()),
            (
                "integrator.max_steps".into(),
                self.stepper.max_steps.to_string(),
            ),
            (
                "boundary.policy".into(),
                match self.boundary {
                    BoundaryPolicy::MirrorNegate => "mirror_negate".into(),
                    BoundaryPolicy::ZeroGhost => "zero_ghost".into(),
                },
            ),
            ("run.t_final".into(), self.t_final.to_string()),
            (
                "output.directory".into(),
                self.output_dir.display().to_string(),
            ),
            (
                "output.series_stride".into(),
                self.series_stride.to_string(),
            ),
            (
                "output.snapshot_times".into(),
                self.snapshot_times
                    .iter()
                    .map(|t| t.to_string())
                    .collect::<Vec<_>>()
                    .join(", "),
            ),
        ]);
        out
    }
}

/// Parses the raw `key = value` lines (syntax and duplicate checks only).
pub fn parse_config_text(text: &str) -> Result<BTreeMap<String, String>, ConfigError> {
    let mut map = BTreeMap::new();
    let mut violations = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = match raw.split_once('#') {
            Some((head, _)) => head,
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            violations.push(format!(
                "line {}: expected `key = value`, got `{}`",
                lineno + 1,
                raw.trim()
            ));
            continue;
        };
        let key = key.trim().to_string();
        let value = value.trim().to_string();
        if key.is_empty() {
            violations.push(format!("line {}: empty key", lineno + 1));
            continue;
        }
        if map.insert(key.clone(), value).is_some() {
            violations.push(format!("line {}: duplicate key `{key}`", lineno + 1));
        }
    }
    if violations.is_empty() {
        Ok(map)
    } else {
        Err(ConfigError { violations })
    }
}

/// Accumulates typed reads from the raw map, recording every failure.
struct Resolver {
    map: BTreeMap<String, String>,
    violations: Vec<String>,
}

impl Resolver {
    fn take(&mut self, key: &str) -> Option<String> {
        self.map.remove(key)
    }

    fn opt_f64(&mut self, key: &str) -> Option<f64> {
        let raw = self.take(key)?;
        match raw.parse::<f64>() {
            Ok(v) if v.is_finite() => Some(v),
            _ => {
                self.violations
                    .push(format!("{key}: expected a finite number, got `{raw}`"));
                None
            }
        }
    }

    fn req_f64(&mut self, key: &str) -> Option<f64> {
        if !self.map.contains_key(key) {
            self.violations.push(format!("{key}: missing required key"));
            return None;
        }
        self.opt_f64(key)
    }

    fn opt_u64(&mut self, key: &str) -> Option<u64> {
        let raw = self.take(key)?;
        match raw.parse::<u64>() {
            Ok(v) => Some(v),
            Err(_) => {
                self.violations
                    .push(format!("{key}: expected a non-negative integer, got `{raw}`"));
                None
            }
        }
    }

    fn req_u64(&mut self, key: &str) -> Option<u64> {
        if !self.map.contains_key(key) {
            self.violations.push(format!("{key}: missing required key"));
            return None;
        }
        self.opt_u64(key)
    }

    fn opt_f64_list(&mut self, key: &str) -> Option<Vec<f64>> {
        let raw = self.take(key)?;
        if raw.trim().is_empty() {
            return Some(Vec::new());
        }
        let mut out = Vec::new();
        for item in raw.split(',') {
            match item.trim().parse::<f64>() {
                Ok(v) if v.is_finite() => out.push(v),
                _ => {
                    self.violations.push(format!(
                        "{key}: expected comma-separated numbers, got `{}`",
                        item.trim()
                    ));
                    return None;
                }
            }
        }
        Some(out)
    }

    fn reject(&mut self, key: &str, reason: &str) {
        if self.take(key).is_some() {
            self.violations.push(format!("{key}: {reason}"));
        }
    }
}

/// Applies defaults and semantic validation to a parsed key map.
pub fn resolve(map: BTreeMap<String, String>) -> Result<RunConfig, ConfigError> {
    let mut r = Resolver {
        map,
        violations: Vec::new(),
    };

    let extent_l = r.req_f64("grid.extent_l");
    if let Some(l) = extent_l {
        if !(l > 0.0) {
            r.violations
                .push(format!("grid.extent_l: must be positive, got {l}"));
        }
    }
    let n_cells = r.req_u64("grid.n_cells");
    if let Some(n) = n_cells {
        if n < 8 {
            r.violations
                .push(format!("grid.n_cells: needs at least 8 cells, got {n}"));
        }
    }

    let mass_mev = r.req_f64("physics.mass_mev");
    let temperature_mev = r.req_f64("physics.temperature_mev");
    let gamma_cfm = r.req_f64("physics.gamma_cfm");
    // The bath cutoff defaults to four times the temperature.
    let omega_cutoff_mev = r
        .opt_f64("physics.omega_cutoff_mev")
        .or(temperature_mev.map(|t| 4.0 * t));
    let osc_omega_cfm = r.opt_f64("physics.osc_omega_cfm");
    let dxx_mode = match r.take("physics.dxx").as_deref() {
        None | Some("zero") => DxxMode::Zero,
        Some("thermal") => DxxMode::Thermal,
        Some(other) => {
            r.violations
                .push(format!("physics.dxx: expected `zero` or `thermal`, got `{other}`"));
            DxxMode::Zero
        }
    };

    let potential = match r.take("potential.kind").as_deref() {
        Some("square_well") => Some(PotentialKind::SquareWell),
        Some("harmonic") => Some(PotentialKind::Harmonic),
        Some(other) => {
            r.violations.push(format!(
                "potential.kind: expected `square_well` or `harmonic`, got `{other}`"
            ));
            None
        }
        None => {
            r.violations
                .push("potential.kind: missing required key".into());
            None
        }
    };
    if potential == Some(PotentialKind::Harmonic) || {
        matches!(r.map.get("initial.kind").map(|s| s.as_str()), Some("harmonic_eigenstate"))
    } {
        match osc_omega_cfm {
            Some(w) if w > 0.0 => {}
            Some(w) => r.violations.push(format!(
                "physics.osc_omega_cfm: harmonic runs need a positive frequency, got {w}"
            )),
            None => r.violations.push(
                "physics.osc_omega_cfm: required for harmonic potentials or initial states"
                    .into(),
            ),
        }
    }

    let initial = match r.take("initial.kind").as_deref() {
        Some("box_eigenstate") => {
            r.reject("initial.width_a", "only applies to gaussian initial states");
            r.reject("initial.half_width", "only applies to rectangular initial states");
            match r.req_u64("initial.n") {
                Some(0) => {
                    r.violations
                        .push("initial.n: box eigenstates start at n = 1".into());
                    None
                }
                Some(n) => Some(InitialSpec::BoxEigenstate { n: n as usize }),
                None => None,
            }
        }
        Some("harmonic_eigenstate") => {
            r.reject("initial.width_a", "only applies to gaussian initial states");
            r.reject("initial.half_width", "only applies to rectangular initial states");
            match r.req_u64("initial.n") {
                Some(n) if n <= crate::initial::MAX_OSCILLATOR_LEVEL as u64 => {
                    Some(InitialSpec::HarmonicEigenstate { n: n as usize })
                }
                Some(n) => {
                    r.violations.push(format!(
                        "initial.n: oscillator levels above {} are not supported, got {n}",
                        crate::initial::MAX_OSCILLATOR_LEVEL
                    ));
                    None
                }
                None => None,
            }
        }
        Some("gaussian") => {
            r.reject("initial.n", "only applies to eigenstate initial states");
            r.reject("initial.half_width", "only applies to rectangular initial states");
            match r.req_f64("initial.width_a") {
                Some(a) if a > 0.0 => Some(InitialSpec::Gaussian { width_a: a }),
                Some(a) => {
                    r.violations
                        .push(format!("initial.width_a: must be positive, got {a}"));
                    None
                }
                None => None,
            }
        }
        Some("rectangular") => {
            r.reject("initial.n", "only applies to eigenstate initial states");
            r.reject("initial.width_a", "only applies to gaussian initial states");
            match r.req_f64("initial.half_width") {
                Some(b) if b > 0.0 => Some(InitialSpec::Rectangular { half_width: b }),
                Some(b) => {
                    r.violations
                        .push(format!("initial.half_width: must be positive, got {b}"));
                    None
                }
                None => None,
            }
        }
        Some(other) => {
            r.violations.push(format!(
                "initial.kind: expected `box_eigenstate`, `harmonic_eigenstate`, `gaussian` \
                 or `rectangular`, got `{other}`"
            ));
            None
        }
        None => {
            r.violations
                .push("initial.kind: missing required key".into());
            None
        }
    };

    let defaults = StepperConfig::default();
    let stepper = StepperConfig {
        rtol: r.opt_f64("integrator.rtol").unwrap_or(defaults.rtol),
        atol: r.opt_f64("integrator.atol").unwrap_or(defaults.atol),
        dt_initial: r
            .opt_f64("integrator.dt_initial")
            .unwrap_or(defaults.dt_initial),
        dt_min: r.opt_f64("integrator.dt_min").unwrap_or(defaults.dt_min),
        max_steps: r
            .opt_u64("integrator.max_steps")
            .unwrap_or(defaults.max_steps),
    };
    if let Err(e) = stepper.validate() {
        r.violations.push(format!("integrator: {e}"));
    }

    let boundary = match r.take("boundary.policy").as_deref() {
        Some("mirror_negate") => Some(BoundaryPolicy::MirrorNegate),
        Some("zero_ghost") => Some(BoundaryPolicy::ZeroGhost),
        Some(other) => {
            r.violations.push(format!(
                "boundary.policy: expected `mirror_negate` or `zero_ghost`, got `{other}`"
            ));
            None
        }
        // Walled domains enforce nodes at the walls; open (harmonic)
        // domains assume the state has decayed before the frame.
        None => potential.map(|p| match p {
            PotentialKind::SquareWell => BoundaryPolicy::MirrorNegate,
            PotentialKind::Harmonic => BoundaryPolicy::ZeroGhost,
        }),
    };

    let t_final = r.req_f64("run.t_final");
    if let Some(t) = t_final {
        if !(t >= 0.0) {
            r.violations
                .push(format!("run.t_final: must be non-negative, got {t}"));
        }
    }

    let output_dir = PathBuf::from(r.take("output.directory").unwrap_or_else(|| ".".into()));
    let series_stride = match (r.opt_f64("output.series_stride"), t_final) {
        (Some(s), _) => {
            if s < 0.0 {
                r.violations
                    .push(format!("output.series_stride: must be non-negative, got {s}"));
            }
            s
        }
        (None, Some(t)) => t / 100.0,
        (None, None) => 0.0,
    };
    let mut snapshot_times = r.opt_f64_list("output.snapshot_times").unwrap_or_default();
    snapshot_times.sort_by(|a, b| a.partial_cmp(b).expect("finite"));
    snapshot_times.dedup();
    if let Some(t) = t_final {
        for &st in &snapshot_times {
            if st < 0.0 || st > t {
                r.violations.push(format!(
                    "output.snapshot_times: {st} lies outside the run window [0, {t}]"
                ));
            }
        }
    }

    // Everything recognized has been consumed; what's left is a typo.
    for key in r.map.keys() {
        r.violations.push(format!("{key}: unknown key"));
    }

    let physics = match (mass_mev, temperature_mev, gamma_cfm, omega_cutoff_mev) {
        (Some(m), Some(t), Some(g), Some(w)) => {
            let p = PhysicalParams {
                mass_mev: m,
                temperature_mev: t,
                gamma_cfm: g,
                omega_cutoff_mev: w,
                osc_omega_cfm: osc_omega_cfm.unwrap_or(0.0),
                dxx_mode,
            };
            if let Err(e) = p.validate() {
                r.violations.push(format!("physics: {e}"));
            }
            Some(p)
        }
        _ => None,
    };

    if !r.violations.is_empty() {
        return Err(ConfigError {
            violations: r.violations,
        });
    }
    Ok(RunConfig {
        extent_l: extent_l.unwrap(),
        n_cells: n_cells.unwrap() as usize,
        physics: physics.unwrap(),
        potential: potential.unwrap(),
        initial: initial.unwrap(),
        stepper,
        boundary: boundary.unwrap(),
        t_final: t_final.unwrap(),
        output_dir,
        series_stride,
        snapshot_times,
    })
}

/// Loads a configuration from text, applying `key=value` overrides before
/// validation.
pub fn load_config_str(
    text: &str,
    overrides: &[(String, String)],
) -> Result<RunConfig, ConfigError> {
    let mut map = parse_config_text(text)?;
    for (k, v) in overrides {
        map.insert(k.clone(), v.clone());
    }
    resolve(map)
}

/// Loads and validates a configuration file, applying overrides.
pub fn load_config(path: &Path, overrides: &[(String, String)]) -> Result<RunConfig, ConfigError> {
    let text = std::fs::read_to_string(path).map_err(|e| ConfigError {
        violations: vec![format!("cannot read {}: {e}", path.display())],
    })?;
    load_config_str(&text, overrides)
}

#[cfg(test)]
mod tests {
    use super::*;

    const FREE_PARTICLE: &str = "
        # Free thermal particle in a box, ground-state start.
        grid.extent_l   = 40.0
        grid.n_cells    = 200
        physics.mass_mev        = 470.0
        physics.temperature_mev = 300.0
        physics.gamma_cfm       = 0.5
        potential.kind  = square_well
        initial.kind    = box_eigenstate
        initial.n       = 1
        run.t_final     = 30.0
    ";

    #[test]
    fn paper_style_config_loads_with_defaults() {
        let cfg = load_config_str(FREE_PARTICLE, &[]).unwrap();
        assert_eq!(cfg.extent_l, 40.0);
        assert_eq!(cfg.n_cells, 200);
        assert_eq!(cfg.physics.mass_mev, 470.0);
        // Cutoff defaults to 4T.
        assert_eq!(cfg.physics.omega_cutoff_mev, 1200.0);
        assert_eq!(cfg.physics.dxx_mode, DxxMode::Zero);
        assert_eq!(cfg.potential, PotentialKind::SquareWell);
        assert_eq!(cfg.initial, InitialSpec::BoxEigenstate { n: 1 });
        // Square-well runs mirror-negate by default.
        assert_eq!(cfg.boundary, BoundaryPolicy::MirrorNegate);
        assert_eq!(cfg.stepper.rtol, 1e-8);
        assert_eq!(cfg.series_stride, 0.3);
        assert!(cfg.snapshot_times.is_empty());
        assert_eq!(cfg.output_dir, PathBuf::from("."));
    }

    #[test]
    fn harmonic_config_defaults_to_zero_ghosts_and_needs_a_frequency() {
        let text = "
            grid.extent_l = 20.0
            grid.n_cells  = 100
            physics.mass_mev        = 470.0
            physics.temperature_mev = 300.0
            physics.gamma_cfm       = 0.5
            physics.osc_omega_cfm   = 0.5
            potential.kind = harmonic
            initial.kind   = harmonic_eigenstate
            initial.n      = 0
            run.t_final    = 20.0
        ";
        let cfg = load_config_str(text, &[]).unwrap();
        assert_eq!(cfg.boundary, BoundaryPolicy::ZeroGhost);
        assert_eq!(cfg.initial, InitialSpec::HarmonicEigenstate { n: 0 });

        let missing = text.replace("physics.osc_omega_cfm   = 0.5", "");
        let err = load_config_str(&missing, &[]).unwrap_err();
        assert!(
            err.violations.iter().any(|v| v.contains("osc_omega_cfm")),
            "{err}"
        );
    }

    #[test]
    fn all_violations_are_reported_together() {
        let text = "
            grid.extent_l = -3.0
            grid.n_cells  = 7
            physics.temperature_mev = 300.0
            physics.gamma_cfm = 0.5
            potential.kind = square_well
            initial.kind   = box_eigenstate
            initial.n      = 0
            run.t_final    = 10.0
            nonsense.key   = 12
        ";
        let err = load_config_str(text, &[]).unwrap_err();
        let text_all = err.violations.join("\n");
        for needle in [
            "grid.extent_l",
            "grid.n_cells",
            "physics.mass_mev",
            "initial.n",
            "nonsense.key",
        ] {
            assert!(text_all.contains(needle), "missing `{needle}` in:\n{text_all}");
        }
        assert!(err.violations.len() >= 5);
    }

    #[test]
    fn syntax_problems_are_caught_line_by_line() {
        let err = parse_config_text("grid.extent_l 40\n= 3\n").unwrap_err();
        assert_eq!(err.violations.len(), 2);
        assert!(err.violations[0].contains("line 1"));

        let err = parse_config_text("a.b = 1\na.b = 2\n").unwrap_err();
        assert!(err.violations[0].contains("duplicate"));
    }

    #[test]
    fn trailing_comments_and_blank_lines_are_ignored() {
        let map =
            parse_config_text("  # full comment\n\n k = 3.0  # trailing\n").unwrap();
        assert_eq!(map.get("k").map(|s| s.as_str()), Some("3.0"));
    }

    #[test]
    fn overrides_replace_file_values_before_validation() {
        let cfg = load_config_str(
            FREE_PARTICLE,
            &[
                ("grid.n_cells".into(), "64".into()),
                ("output.directory".into(), "out/test".into()),
            ],
        )
        .unwrap();
        assert_eq!(cfg.n_cells, 64);
        assert_eq!(cfg.output_dir, PathBuf::from("out/test"));

        // An override can also break the config; the error must say why.
        let err =
            load_config_str(FREE_PARTICLE, &[("grid.n_cells".into(), "4".into())]).unwrap_err();
        assert!(err.violations.iter().any(|v| v.contains("n_cells")));
    }

    #[test]
    fn inapplicable_initial_parameters_are_contradictions() {
        let text = FREE_PARTICLE.replace("initial.n       = 1", "initial.n = 1\ninitial.width_a = 2.0");
        let err = load_config_str(&text, &[]).unwrap_err();
        assert!(err.violations.iter().any(|v| v.contains("width_a")), "{err}");
    }

    #[test]
    fn snapshot_times_must_fit_the_run_window() {
        let cfg = load_config_str(
            FREE_PARTICLE,
            &[(
                "output.snapshot_times".into(),
                "20.0, 5.0, 5.0, 30.0".into(),
            )],
        )
        .unwrap();
        assert_eq!(cfg.snapshot_times, vec![5.0, 20.0, 30.0]);

        let err = load_config_str(
            FREE_PARTICLE,
            &[("output.snapshot_times".into(), "35.0".into())],
        )
        .unwrap_err();
        assert!(err.violations.iter().any(|v| v.contains("snapshot_times")));
    }

    #[test]
    fn resolved_entries_cover_every_key_with_defaults_applied() {
        let cfg = load_config_str(FREE_PARTICLE, &[]).unwrap();
        let entries = cfg.resolved_entries();
        let get = |key: &str| {
            entries
                .iter()
                .find(|(k, _)| k == key)
                .map(|(_, v)| v.as_str())
                .unwrap_or_else(|| panic!("missing {key}"))
        };
        assert_eq!(get("physics.omega_cutoff_mev"), "1200");
        assert_eq!(get("boundary.policy"), "mirror_negate");
        assert_eq!(get("integrator.rtol"), "0.00000001");
        assert_eq!(get("output.series_stride"), "0.3");
        // A resolved entry set round-trips through the parser.
        let text: String = entries
            .iter()
            .map(|(k, v)| format!("{k} = {v}\n"))
            .collect();
        let again = load_config_str(&text, &[]).unwrap();
        assert_eq!(again.n_cells, cfg.n_cells);
        assert_eq!(again.physics.omega_cutoff_mev, cfg.physics.omega_cutoff_mev);
        assert_eq!(again.series_stride, cfg.series_stride);
    }
}
