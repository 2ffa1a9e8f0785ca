//! The three exactly solvable problems used as seeds.
//!
//! Each problem carries its eigenvalue shift absorbed into the potential, so
//! the chosen eigenstate is a zero mode: `ψ'' = V ψ` holds identically.
//! Hydrogen is posed in Bohr radii and Rydberg energies on the reduced radial
//! function `u = r R`.

use std::f64::consts::PI;
use std::fmt;

use crate::error::{Error, Result};
use crate::numerics::{integrate, Grid, SampledCurve};
use crate::specfun::{assoc_laguerre, hermite, ln_factorial};

/// Half-width of the default oscillator domain.
pub const OSCILLATOR_HALF_WIDTH: f64 = 10.0;
/// Points in the default oscillator grid (`h = 0.005`).
pub const OSCILLATOR_POINTS: usize = 4001;
/// Minimum points across the square well.
pub const SQUARE_WELL_MIN_POINTS: usize = 4001;
/// Inner radius of hydrogen grids, in Bohr radii.
pub const HYDROGEN_R_MIN: f64 = 1e-8;
/// Largest spacing used when a default grid is sized from its length.
pub const DEFAULT_MAX_SPACING: f64 = 0.005;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProblemKind {
    Oscillator,
    SquareWell,
    Hydrogen,
}

impl fmt::Display for ProblemKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ProblemKind::Oscillator => "oscillator",
            ProblemKind::SquareWell => "square-well",
            ProblemKind::Hydrogen => "hydrogen",
        })
    }
}

/// An exactly solvable problem together with the eigenstate that seeds the
/// deformation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ProblemSpec {
    /// `V = z^2 - (2n + 1)` on the full line.
    Oscillator { n: u32 },
    /// Infinite well on `[-L/2, L/2]`, `n >= 1`.
    SquareWell { n: u32, length: f64 },
    /// Coulomb problem with centrifugal barrier, `n >= 1`, `l < n`.
    Hydrogen { n: u32, l: u32 },
}

impl ProblemSpec {
    pub fn oscillator(n: u32) -> Self {
        ProblemSpec::Oscillator { n }
    }

    pub fn square_well(n: u32, length: f64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidProblem(
                "square well states are labelled from n = 1".into(),
            ));
        }
        if !(length.is_finite() && length > 0.0) {
            return Err(Error::InvalidProblem(format!(
                "well length must be positive and finite, got {length}"
            )));
        }
        Ok(ProblemSpec::SquareWell { n, length })
    }

    pub fn hydrogen(n: u32, l: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidProblem(
                "hydrogen principal quantum number starts at 1".into(),
            ));
        }
        if l >= n {
            return Err(Error::InvalidProblem(format!(
                "hydrogen needs l < n, got n = {n}, l = {l}"
            )));
        }
        Ok(ProblemSpec::Hydrogen { n, l })
    }

    pub fn kind(&self) -> ProblemKind {
        match self {
            ProblemSpec::Oscillator { .. } => ProblemKind::Oscillator,
            ProblemSpec::SquareWell { .. } => ProblemKind::SquareWell,
            ProblemSpec::Hydrogen { .. } => ProblemKind::Hydrogen,
        }
    }

    pub fn n(&self) -> u32 {
        match *self {
            ProblemSpec::Oscillator { n }
            | ProblemSpec::SquareWell { n, .. }
            | ProblemSpec::Hydrogen { n, .. } => n,
        }
    }

    /// Lower limit of the deformation integral; `-inf` on the full line.
    pub fn lower_limit(&self) -> f64 {
        match *self {
            ProblemSpec::Oscillator { .. } => f64::NEG_INFINITY,
            ProblemSpec::SquareWell { length, .. } => -0.5 * length,
            ProblemSpec::Hydrogen { .. } => 0.0,
        }
    }

    /// Whether the potential is even about `z = 0`.
    pub fn is_symmetric(&self) -> bool {
        !matches!(self, ProblemSpec::Hydrogen { .. })
    }

    /// Interior nodes of the seed eigenstate.
    pub fn node_count(&self) -> usize {
        match *self {
            ProblemSpec::Oscillator { n } => n as usize,
            ProblemSpec::SquareWell { n, .. } => (n - 1) as usize,
            ProblemSpec::Hydrogen { n, l } => (n - l - 1) as usize,
        }
    }

    pub fn default_domain(&self) -> (f64, f64) {
        match *self {
            ProblemSpec::Oscillator { .. } => (-OSCILLATOR_HALF_WIDTH, OSCILLATOR_HALF_WIDTH),
            ProblemSpec::SquareWell { length, .. } => (-0.5 * length, 0.5 * length),
            ProblemSpec::Hydrogen { n, .. } => {
                let n = f64::from(n);
                (HYDROGEN_R_MIN, (10.0 * n * n).max(50.0))
            }
        }
    }

    /// Grid used when none is given: `h <= 0.005` everywhere, and finer for
    /// the square well so its closed-form levels resolve to `1e-3`.
    pub fn default_grid(&self) -> Grid {
        let (a, b) = self.default_domain();
        let grid = match self {
            ProblemSpec::Oscillator { .. } => Grid::new(a, b, OSCILLATOR_POINTS),
            ProblemSpec::SquareWell { .. } => {
                let sized = Grid::with_max_spacing(a, b, DEFAULT_MAX_SPACING)
                    .expect("well length is positive");
                Grid::new(a, b, sized.n_points().max(SQUARE_WELL_MIN_POINTS))
            }
            ProblemSpec::Hydrogen { .. } => Grid::with_max_spacing(a, b, DEFAULT_MAX_SPACING),
        };
        grid.expect("default domains are valid")
    }

    /// The constant absorbed into the potential, minus the seed level's energy.
    pub fn energy_shift(&self) -> f64 {
        match *self {
            ProblemSpec::Oscillator { n } => -(2.0 * f64::from(n) + 1.0),
            ProblemSpec::SquareWell { n, length } => {
                let k = PI * f64::from(n) / length;
                -k * k
            }
            ProblemSpec::Hydrogen { n, .. } => 1.0 / f64::from(n * n),
        }
    }

    /// Shifted potential at a point of the domain.
    pub fn potential_at(&self, z: f64) -> f64 {
        self.potential_derivatives_at(z)[0]
    }

    /// `[V, V', V'']` at `z`.
    pub fn potential_derivatives_at(&self, z: f64) -> [f64; 3] {
        let shift = self.energy_shift();
        match *self {
            ProblemSpec::Oscillator { .. } => [z * z + shift, 2.0 * z, 2.0],
            ProblemSpec::SquareWell { .. } => [shift, 0.0, 0.0],
            ProblemSpec::Hydrogen { l, .. } => {
                let c = f64::from(l * (l + 1));
                let inv = 1.0 / z;
                let inv2 = inv * inv;
                [
                    -2.0 * inv + c * inv2 + shift,
                    2.0 * inv2 - 2.0 * c * inv2 * inv,
                    -4.0 * inv2 * inv + 6.0 * c * inv2 * inv2,
                ]
            }
        }
    }

    /// Unit-normalized seed eigenfunction and its derivative at `z`.
    pub fn psi_at(&self, z: f64) -> (f64, f64) {
        match *self {
            ProblemSpec::Oscillator { n } => {
                let ln_norm = -0.5 * (f64::from(n) * 2f64.ln() + ln_factorial(n) + 0.5 * PI.ln());
                let envelope = (ln_norm - 0.5 * z * z).exp();
                let h = hermite(n, z);
                (envelope * h.value, envelope * (h.derivative - z * h.value))
            }
            ProblemSpec::SquareWell { n, length } => {
                let amp = (2.0 / length).sqrt();
                let k = PI * f64::from(n) / length;
                let (s, c) = (k * z).sin_cos();
                if n % 2 == 1 {
                    (amp * c, -amp * k * s)
                } else {
                    (amp * s, amp * k * c)
                }
            }
            ProblemSpec::Hydrogen { n, l } => hydrogen_reduced(n, l, z),
        }
    }

    /// Closed-form shifted eigenvalues of the `count` lowest levels.
    pub fn closed_form_levels(&self, count: usize) -> Vec<f64> {
        let shift = self.energy_shift();
        match *self {
            ProblemSpec::Oscillator { .. } => {
                (0..count).map(|j| 2.0 * j as f64 + 1.0 + shift).collect()
            }
            ProblemSpec::SquareWell { length, .. } => (1..=count)
                .map(|j| {
                    let k = PI * j as f64 / length;
                    k * k + shift
                })
                .collect(),
            ProblemSpec::Hydrogen { l, .. } => (0..count)
                .map(|j| {
                    let principal = (l as usize + 1 + j) as f64;
                    shift - 1.0 / (principal * principal)
                })
                .collect(),
        }
    }

    /// Checks that every sample of `grid` lies where the potential is defined.
    pub fn check_grid(&self, grid: &Grid) -> Result<()> {
        match *self {
            ProblemSpec::Oscillator { .. } => Ok(()),
            ProblemSpec::SquareWell { length, .. } => {
                let wall = 0.5 * length;
                let tol = 1e-12 * length;
                if grid.z_min() < -wall - tol || grid.z_max() > wall + tol {
                    return Err(Error::OutOfDomain(format!(
                        "square well of length {length} needs samples within [{}, {}], got [{}, {}]",
                        -wall,
                        wall,
                        grid.z_min(),
                        grid.z_max()
                    )));
                }
                Ok(())
            }
            ProblemSpec::Hydrogen { .. } => {
                if grid.z_min() <= 0.0 {
                    return Err(Error::OutOfDomain(format!(
                        "hydrogen grids need r > 0, got r_min = {}",
                        grid.z_min()
                    )));
                }
                Ok(())
            }
        }
    }

    /// Probability mass between the lower integration limit and `z`.
    ///
    /// Evaluated by Simpson quadrature of the analytic density; on the full
    /// line the Gaussian tail below `z - 20` is far beneath f64 resolution.
    pub fn mass_below(&self, z: f64) -> f64 {
        let lower = match self.lower_limit() {
            l if l.is_finite() => l,
            _ => z - 20.0,
        };
        if z <= lower {
            return 0.0;
        }
        let grid = Grid::new(lower, z, 4001).expect("nonempty interval");
        let density = SampledCurve::from_fn(grid, |x| self.psi_at(x).0.powi(2))
            .expect("analytic density is finite");
        integrate(&density).expect("odd grid")
    }
}

impl fmt::Display for ProblemSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ProblemSpec::Oscillator { n } => write!(f, "oscillator n={n}"),
            ProblemSpec::SquareWell { n, length } => write!(f, "square-well n={n} L={length}"),
            ProblemSpec::Hydrogen { n, l } => write!(f, "hydrogen n={n} l={l}"),
        }
    }
}

/// `u_{nl}(r) = r R_{nl}(r)` normalized so that `∫ u^2 dr = 1`, and `u'`.
fn hydrogen_reduced(n: u32, l: u32, r: f64) -> (f64, f64) {
    let nf = f64::from(n);
    let lf = f64::from(l);
    let scale = 2.0 / nf;
    let ln_norm = 0.5
        * (3.0 * scale.ln() + ln_factorial(n - l - 1) - (2.0 * nf).ln() - ln_factorial(n + l))
        + lf * scale.ln();
    let lag = assoc_laguerre(n - l - 1, 2 * l + 1, scale * r);
    let envelope = (ln_norm - r / nf).exp();
    let r_l = r.powi(l as i32);
    let u = envelope * r_l * r * lag.value;
    let du = envelope * r_l * ((lf + 1.0 - r / nf) * lag.value + scale * r * lag.derivative);
    (u, du)
}

/// Samples of the seed state and its analytic derivative.
#[derive(Debug, Clone, PartialEq)]
pub struct ModeSamples {
    pub psi: SampledCurve,
    pub dpsi: SampledCurve,
}

/// Shifted potential sampled on `grid`.
pub fn potential(spec: &ProblemSpec, grid: &Grid) -> Result<SampledCurve> {
    spec.check_grid(grid)?;
    SampledCurve::from_fn(*grid, |z| spec.potential_at(z))
}

/// Normalized seed eigenfunction and derivative sampled on `grid`.
pub fn eigenfunction(spec: &ProblemSpec, grid: &Grid) -> Result<ModeSamples> {
    spec.check_grid(grid)?;
    let (psi, dpsi): (Vec<f64>, Vec<f64>) = grid.points().map(|z| spec.psi_at(z)).unzip();
    Ok(ModeSamples {
        psi: SampledCurve::new(*grid, psi)?,
        dpsi: SampledCurve::new(*grid, dpsi)?,
    })
}

pub fn energy_shift(spec: &ProblemSpec) -> f64 {
    spec.energy_shift()
}
