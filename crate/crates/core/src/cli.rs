//! Dataset generation and the verification report behind the command-line
//! tool.
//!
//! CSV output uses `.` decimals, LF line endings, 17 significant digits and
//! `#` comment lines. Column labels embed each λ in its shortest
//! round-tripping decimal form, so [`header_lambdas`] recovers the list
//! exactly.

use std::fmt;

use crate::darboux::{admissible, build_state, LambdaFamily, StateTable};
use crate::eigensolver::{build_hamiltonian, eigenvalues_lowest, SpectrumReport};
use crate::error::{Error, Result};
use crate::numerics::{count_sign_changes, Grid, SIGN_DEADBAND};
use crate::problems::{ProblemKind, ProblemSpec};

/// λ values used by the figure commands when none are given.
pub const DEFAULT_LAMBDAS: [f64; 4] = [0.5, 1.0, 5.0, 10.0];
/// Display multiplier applied to mode columns.
pub const DEFAULT_SCALE: f64 = 10.0;
/// `|V|` below which a percentual difference is left empty.
pub const PCT_FLOOR: f64 = 1e-12;

/// Tolerances applied by [`verify`].
pub mod tolerances {
    pub const NORMALIZATION: f64 = 1e-6;
    pub const DEFORMED_RESIDUAL: f64 = 5e-3;
    pub const SPECTRUM: f64 = 1e-3;
    pub const CLOSED_FORM: f64 = 1e-3;
    pub const RECOVERY_LAMBDA: f64 = 1e6;
    pub const RECOVERY_POTENTIAL: f64 = 1e-4;
    pub const RECOVERY_MODE: f64 = 1e-5;
    pub const REFLECTION: f64 = 1e-10;
    pub const RICCATI_DEADBAND: f64 = 0.05;
    pub const RICCATI_AGREEMENT: f64 = 1e-9;
    pub const LEVELS: usize = 4;
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GridChoice {
    /// The problem's default grid.
    Auto,
    Explicit {
        z_min: f64,
        z_max: f64,
        n_points: usize,
    },
}

/// One invocation's worth of settings.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub problem: ProblemSpec,
    pub lambdas: Vec<f64>,
    pub grid: GridChoice,
    pub scale: f64,
}

impl RunConfig {
    /// Validates the λ list and the scale; the grid is checked when resolved.
    pub fn new(
        problem: ProblemSpec,
        lambdas: Vec<f64>,
        grid: GridChoice,
        scale: f64,
    ) -> Result<Self> {
        if lambdas.is_empty() {
            return Err(Error::Config("at least one lambda is required".into()));
        }
        if let Some(&bad) = lambdas.iter().find(|l| !admissible(**l)) {
            return Err(Error::InadmissibleLambda(bad));
        }
        if !scale.is_finite() {
            return Err(Error::Config(format!("scale must be finite, got {scale}")));
        }
        Ok(Self {
            problem,
            lambdas,
            grid,
            scale,
        })
    }

    pub fn resolve_grid(&self) -> Result<Grid> {
        let grid = match self.grid {
            GridChoice::Auto => self.problem.default_grid(),
            GridChoice::Explicit {
                z_min,
                z_max,
                n_points,
            } => Grid::new(z_min, z_max, n_points)?,
        };
        if !grid.is_simpson_compatible() {
            return Err(Error::EvenPointCount(grid.n_points()));
        }
        self.problem.check_grid(&grid)?;
        Ok(grid)
    }

    fn state(&self) -> Result<StateTable> {
        build_state(&self.problem, &self.resolve_grid()?)
    }
}

/// 17 significant digits in scientific notation.
pub fn format_number(x: f64) -> String {
    format!("{x:.16e}")
}

/// Shortest decimal that parses back to exactly `lambda`.
pub fn lambda_label(lambda: f64) -> String {
    format!("{lambda}")
}

/// λ values embedded in header columns named `<prefix><λ>`, in order.
pub fn header_lambdas(header: &str, prefix: &str) -> Vec<f64> {
    header
        .trim_end()
        .split(',')
        .filter_map(|col| col.strip_prefix(prefix))
        .filter_map(|s| s.parse().ok())
        .collect()
}

fn push_row(out: &mut String, fields: impl IntoIterator<Item = String>) {
    let mut first = true;
    for f in fields {
        if !first {
            out.push(',');
        }
        out.push_str(&f);
        first = false;
    }
    out.push('\n');
}

fn finite_or_empty(x: f64) -> String {
    if x.is_finite() {
        format_number(x)
    } else {
        String::new()
    }
}

/// Deformed potentials and scaled modes for each λ.
///
/// Columns: `z,V_original`, then `V_lambda_<λ>,psi_lambda_<λ>` per λ.
pub fn family_csv(cfg: &RunConfig) -> Result<String> {
    let family = LambdaFamily::build(cfg.state()?, &cfg.lambdas)?;
    let base = family.base();
    let grid = base.grid();

    let mut out = String::new();
    let mut header = vec!["z".to_string(), "V_original".to_string()];
    for &lambda in family.lambdas() {
        let label = lambda_label(lambda);
        header.push(format!("V_lambda_{label}"));
        header.push(format!("psi_lambda_{label}"));
    }
    push_row(&mut out, header);

    for k in 0..grid.n_points() {
        let mut row = vec![
            format_number(grid.point(k)),
            format_number(base.potential().values()[k]),
        ];
        for (_, v, mode) in family.iter() {
            row.push(format_number(v.values()[k]));
            row.push(format_number(cfg.scale * mode.values()[k]));
        }
        push_row(&mut out, row);
    }
    Ok(out)
}

/// Percentual potential change and density change for a hydrogen seed.
///
/// Columns: `z`, `pct_dV_<λ>` per λ, then `dpsi2_<λ>` per λ. Percentual
/// entries are empty where `|V| < PCT_FLOOR`.
pub fn hydrogen_diff_csv(cfg: &RunConfig) -> Result<String> {
    if cfg.problem.kind() != ProblemKind::Hydrogen {
        return Err(Error::Config(format!(
            "hydrogen-diff needs the hydrogen problem, got {}",
            cfg.problem.kind()
        )));
    }
    let family = LambdaFamily::build(cfg.state()?, &cfg.lambdas)?;
    let base = family.base();
    let grid = base.grid();
    let v0 = base.potential().values();
    let density = base.density().values();

    let mut out = String::new();
    let mut header = vec!["z".to_string()];
    header.extend(
        family
            .lambdas()
            .iter()
            .map(|l| format!("pct_dV_{}", lambda_label(*l))),
    );
    header.extend(
        family
            .lambdas()
            .iter()
            .map(|l| format!("dpsi2_{}", lambda_label(*l))),
    );
    push_row(&mut out, header);

    for k in 0..grid.n_points() {
        let mut row = vec![format_number(grid.point(k))];
        for v in family.potentials() {
            row.push(if v0[k].abs() < PCT_FLOOR {
                String::new()
            } else {
                format_number(100.0 * (v.values()[k] - v0[k]) / v0[k])
            });
        }
        for m in family.modes() {
            let phi = m.values()[k];
            row.push(format_number(phi * phi - density[k]));
        }
        push_row(&mut out, row);
    }
    Ok(out)
}

/// Classical partner with empty fields near poles and `# pole:` trailers.
pub fn partner_csv(cfg: &RunConfig) -> Result<String> {
    let partner = cfg.state()?.darboux_partner();
    let mut out = String::from("z,V2\n");
    for (z, v) in partner.curve.samples() {
        push_row(&mut out, [format_number(z), finite_or_empty(v)]);
    }
    for p in &partner.poles {
        out.push_str(&format!("# pole: {}\n", format_number(*p)));
    }
    Ok(out)
}

/// One verification outcome.
#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub measured: f64,
    pub tolerance: f64,
    pub passed: bool,
}

impl Check {
    fn below(name: impl Into<String>, measured: f64, tolerance: f64) -> Self {
        Self {
            name: name.into(),
            measured,
            tolerance,
            passed: measured < tolerance,
        }
    }

    fn at_most(name: impl Into<String>, measured: f64, tolerance: f64) -> Self {
        Self {
            name: name.into(),
            measured,
            tolerance,
            passed: measured <= tolerance,
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {}: measured {:.3e}, tolerance {:.3e}",
            if self.passed { "PASS" } else { "FAIL" },
            self.name,
            self.measured,
            self.tolerance
        )
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Run every invariant check for the configured seed and λ list.
pub fn verify(cfg: &RunConfig) -> Result<VerifyReport> {
    use tolerances::*;

    let state = cfg.state()?;
    let spec = cfg.problem;
    let mut checks = Vec::new();

    let original = eigenvalues_lowest(&build_hamiltonian(state.potential())?, LEVELS)?;
    let closed = spec.closed_form_levels(LEVELS);
    let closed_err = original
        .iter()
        .zip(&closed)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    checks.push(Check::below(
        format!("{spec} closed-form spectrum (k={LEVELS})"),
        closed_err,
        CLOSED_FORM,
    ));

    let riccati = state.riccati_residual(RICCATI_DEADBAND);
    checks.push(Check::at_most(
        format!("{spec} riccati residual vs stencil bound"),
        riccati.original,
        riccati.stencil_bound,
    ));
    checks.push(Check::at_most(
        format!("{spec} riccati partner agreement"),
        (riccati.original - riccati.partner).abs(),
        RICCATI_AGREEMENT * riccati.original.max(1.0),
    ));

    let recovery = state.recovery(RECOVERY_LAMBDA)?;
    checks.push(Check::below(
        format!("{spec} large-lambda potential recovery"),
        recovery.potential,
        RECOVERY_POTENTIAL,
    ));
    checks.push(Check::below(
        format!("{spec} large-lambda mode recovery"),
        recovery.mode,
        RECOVERY_MODE,
    ));

    let seed_nodes = state.node_count();
    let grid = *state.grid();
    let symmetric_grid =
        (grid.z_min() + grid.z_max()).abs() <= 1e-12 * (grid.z_max() - grid.z_min());

    for &lambda in &cfg.lambdas {
        let tag = format!("{spec} lambda={}", lambda_label(lambda));

        let norm = state.mode_norm(lambda)?;
        checks.push(Check::below(
            format!("{tag} normalization"),
            (norm - 1.0).abs(),
            NORMALIZATION,
        ));

        checks.push(Check::below(
            format!("{tag} deformed-mode residual"),
            state.deformed_schrodinger_residual(lambda)?,
            DEFORMED_RESIDUAL,
        ));

        let nodes = count_sign_changes(&state.deformed_mode(lambda)?, SIGN_DEADBAND);
        checks.push(Check::at_most(
            format!("{tag} node preservation ({nodes} vs {seed_nodes})"),
            nodes.abs_diff(seed_nodes) as f64,
            0.0,
        ));

        if spec.is_symmetric() && symmetric_grid {
            checks.push(Check::below(
                format!("{tag} reflection identity"),
                state.reflection_defect(lambda)?,
                REFLECTION,
            ));
        }

        let deformed = eigenvalues_lowest(
            &build_hamiltonian(&state.isospectral_potential(lambda)?)?,
            LEVELS,
        )?;
        let report = SpectrumReport::new(lambda, original.clone(), deformed);
        checks.push(Check::below(
            format!("{tag} isospectrality (k={LEVELS})"),
            report.max_deviation,
            SPECTRUM,
        ));
    }

    Ok(VerifyReport { checks })
}
