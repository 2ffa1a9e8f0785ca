//! Strictly isospectral deformation of a seed eigenstate.
//!
//! Given a zero mode `ψ` of a shifted potential `V` and its running
//! probability `I(z) = ∫ ψ²`, every admissible `λ` yields
//!
//! ```text
//! V(z; λ) = V - 2 D² ln(I + λ) = V - 4 ψ ψ' / (I + λ) + 2 ψ⁴ / (I + λ)²
//! φ(z; λ) = sqrt(λ (λ + 1)) ψ / (I + λ)
//! ```
//!
//! with `φ` a unit-normalized zero mode of `V(z; λ)` and the whole spectrum
//! unchanged. The classical partner `V₂ = V - 2 D² ln ψ = -V + 2 (ψ'/ψ)²`
//! instead drops the seed level and is singular at every node of `ψ`.

use crate::error::{Error, Result};
use crate::numerics::{
    count_sign_changes, cumulative_integral, integrate, second_derivative, Grid, SampledCurve,
    SIGN_DEADBAND,
};
use crate::problems::{eigenfunction, potential, ProblemKind, ProblemSpec};

/// Largest tolerated probability mass left of the grid.
pub const MAX_EXCLUDED_MASS: f64 = 1e-10;
/// Largest tolerated deviation of the total probability from one.
pub const MAX_NORM_DEFECT: f64 = 1e-6;
/// Samples within this many spacings of a partner pole are masked.
pub const POLE_EXCLUSION_SPACINGS: f64 = 3.0;
/// Bracket width at which pole bisection stops.
pub const POLE_TOLERANCE: f64 = 1e-10;

/// True iff `I + λ` cannot vanish for `I ∈ [0, 1]`.
pub fn admissible(lambda: f64) -> bool {
    lambda.is_finite() && !(-1.0..=0.0).contains(&lambda)
}

fn check_admissible(lambda: f64) -> Result<()> {
    if admissible(lambda) {
        Ok(())
    } else {
        Err(Error::InadmissibleLambda(lambda))
    }
}

/// Seed state sampled on a grid together with its running probability.
#[derive(Debug, Clone, PartialEq)]
pub struct StateTable {
    spec: ProblemSpec,
    potential: SampledCurve,
    psi: SampledCurve,
    dpsi: SampledCurve,
    density: SampledCurve,
    integral: SampledCurve,
}

/// Sample the seed state of `spec` on `grid` and integrate its density.
///
/// Fails when the grid leaves more than [`MAX_EXCLUDED_MASS`] below its left
/// edge or when the total probability misses one by more than
/// [`MAX_NORM_DEFECT`].
pub fn build_state(spec: &ProblemSpec, grid: &Grid) -> Result<StateTable> {
    let modes = eigenfunction(spec, grid)?;
    let v = potential(spec, grid)?;
    let excluded = spec.mass_below(grid.z_min());
    if excluded > MAX_EXCLUDED_MASS {
        return Err(Error::Normalization(format!(
            "{spec}: mass {excluded:.3e} lies below the grid edge {}",
            grid.z_min()
        )));
    }
    let density = SampledCurve::new(*grid, modes.psi.values().iter().map(|p| p * p).collect())?;
    let integral = cumulative_integral(&density)?;
    let total = *integral.values().last().expect("nonempty grid");
    if (total - 1.0).abs() > MAX_NORM_DEFECT {
        return Err(Error::Normalization(format!(
            "{spec}: total probability {total} on [{}, {}]",
            grid.z_min(),
            grid.z_max()
        )));
    }
    Ok(StateTable {
        spec: *spec,
        potential: v,
        psi: modes.psi,
        dpsi: modes.dpsi,
        density,
        integral,
    })
}

/// Classical Darboux partner with its singularities.
#[derive(Debug, Clone, PartialEq)]
pub struct Partner {
    /// `V₂` with NaN inside each pole-exclusion zone.
    pub curve: SampledCurve,
    /// Refined nodes of the seed state, ascending.
    pub poles: Vec<f64>,
}

impl Partner {
    /// Number of finite pieces the poles split the partner into.
    pub fn branch_count(&self) -> usize {
        self.poles.len() + 1
    }
}

/// Riccati residuals of the superpotential `y = ψ'/ψ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RiccatiResidual {
    /// `max |y' + y² - V|`
    pub original: f64,
    /// `max |-y' + y² - V₂|`
    pub partner: f64,
    /// Truncation bound of the central difference used for `y'`.
    pub stencil_bound: f64,
    /// Samples that passed the deadband.
    pub samples: usize,
}

/// `λ → ∞` recovery defects.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Recovery {
    pub potential: f64,
    pub mode: f64,
}

impl StateTable {
    pub fn spec(&self) -> &ProblemSpec {
        &self.spec
    }

    pub fn grid(&self) -> &Grid {
        self.psi.grid()
    }

    pub fn potential(&self) -> &SampledCurve {
        &self.potential
    }

    pub fn psi(&self) -> &SampledCurve {
        &self.psi
    }

    pub fn dpsi(&self) -> &SampledCurve {
        &self.dpsi
    }

    pub fn density(&self) -> &SampledCurve {
        &self.density
    }

    /// Running probability `I(z)`.
    pub fn integral(&self) -> &SampledCurve {
        &self.integral
    }

    pub fn node_count(&self) -> usize {
        count_sign_changes(&self.psi, SIGN_DEADBAND)
    }

    fn zip_with(&self, f: impl Fn(f64, f64, f64, f64) -> f64) -> Vec<f64> {
        let v = self.potential.values();
        let psi = self.psi.values();
        let dpsi = self.dpsi.values();
        let i = self.integral.values();
        (0..v.len())
            .map(|k| f(v[k], psi[k], dpsi[k], i[k]))
            .collect()
    }

    /// Deformed potential `V(z; λ)`.
    pub fn isospectral_potential(&self, lambda: f64) -> Result<SampledCurve> {
        check_admissible(lambda)?;
        let values = self.zip_with(|v, psi, dpsi, i| {
            let d = i + lambda;
            let p2 = psi * psi;
            v - 4.0 * psi * dpsi / d + 2.0 * p2 * p2 / (d * d)
        });
        SampledCurve::new(*self.grid(), values)
    }

    /// Normalized zero mode `φ(z; λ)` of the deformed potential.
    pub fn deformed_mode(&self, lambda: f64) -> Result<SampledCurve> {
        check_admissible(lambda)?;
        let amplitude = (lambda * (lambda + 1.0)).sqrt();
        let values = self.zip_with(|_, psi, _, i| amplitude * psi / (i + lambda));
        SampledCurve::new(*self.grid(), values)
    }

    /// `∫ φ(z; λ)² dz` by Simpson quadrature.
    pub fn mode_norm(&self, lambda: f64) -> Result<f64> {
        let mode = self.deformed_mode(lambda)?;
        let sq = mode.values().iter().map(|p| p * p).collect();
        integrate(&SampledCurve::new(*self.grid(), sq)?)
    }

    /// Classical partner `V₂ = -V + 2 (ψ'/ψ)²` with masked pole neighbourhoods.
    pub fn darboux_partner(&self) -> Partner {
        let grid = *self.grid();
        let poles = self.refined_nodes();
        let radius = POLE_EXCLUSION_SPACINGS * grid.h();
        let wall_tol = 1e-12 * (grid.z_max() - grid.z_min());
        let walls = match self.spec {
            ProblemSpec::SquareWell { length, .. } => Some(0.5 * length),
            _ => None,
        };
        let values = self
            .zip_with(|v, psi, dpsi, _| {
                let y = dpsi / psi;
                -v + 2.0 * y * y
            })
            .into_iter()
            .zip(grid.points())
            .map(|(value, z)| {
                let near_pole = poles.iter().any(|p| (z - p).abs() <= radius);
                let on_wall = walls.is_some_and(|w| (z.abs() - w).abs() <= wall_tol);
                if near_pole || on_wall || !value.is_finite() {
                    f64::NAN
                } else {
                    value
                }
            })
            .collect();
        Partner {
            curve: SampledCurve::with_poles(grid, values).expect("length matches grid"),
            poles,
        }
    }

    /// Interior nodes of `ψ`, bracketed from the samples and bisected on the
    /// analytic eigenfunction.
    fn refined_nodes(&self) -> Vec<f64> {
        let grid = self.grid();
        let psi = self.psi.values();
        let mut nodes = Vec::new();
        let mut previous: Option<(usize, f64)> = None;
        for (k, &v) in psi.iter().enumerate() {
            if v.abs() <= SIGN_DEADBAND {
                continue;
            }
            if let Some((j, pv)) = previous {
                if (pv > 0.0) != (v > 0.0) {
                    nodes.push(self.bisect_node(grid.point(j), grid.point(k)));
                }
            }
            previous = Some((k, v));
        }
        nodes
    }

    fn bisect_node(&self, mut lo: f64, mut hi: f64) -> f64 {
        let f = |z: f64| self.spec.psi_at(z).0;
        let mut f_lo = f(lo);
        while hi - lo > POLE_TOLERANCE {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            let f_mid = f(mid);
            if f_mid == 0.0 {
                return mid;
            }
            if (f_mid > 0.0) == (f_lo > 0.0) {
                lo = mid;
                f_lo = f_mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    }

    /// Riccati residuals with `y = ψ'/ψ` evaluated analytically and `y'`
    /// taken by central differences.
    ///
    /// Only stencils whose three samples all satisfy
    /// `|ψ| > deadband · max|ψ|` contribute, which keeps the check away from
    /// the poles of `y`.
    pub fn riccati_residual(&self, deadband: f64) -> RiccatiResidual {
        let grid = self.grid();
        let h = grid.h();
        let psi = self.psi.values();
        let dpsi = self.dpsi.values();
        let v = self.potential.values();
        let cutoff = deadband * self.psi.max_abs();
        let y: Vec<f64> = psi.iter().zip(dpsi).map(|(p, d)| d / p).collect();

        // y' = V - y², y'' = V' - 2 y y', y''' = V'' - 2 y'² - 2 y y''
        let third = |k: usize| {
            let [_, dv, d2v] = self.spec.potential_derivatives_at(grid.point(k));
            let y1 = v[k] - y[k] * y[k];
            let y2 = dv - 2.0 * y[k] * y1;
            (d2v - 2.0 * y1 * y1 - 2.0 * y[k] * y2).abs()
        };

        let mut out = RiccatiResidual {
            original: 0.0,
            partner: 0.0,
            stencil_bound: 0.0,
            samples: 0,
        };
        let mut largest_term = 0.0_f64;
        let mut largest_third = 0.0_f64;
        for k in 1..psi.len() - 1 {
            if psi[k - 1..=k + 1].iter().any(|p| p.abs() <= cutoff) {
                continue;
            }
            let dy = (y[k + 1] - y[k - 1]) / (2.0 * h);
            let y2 = y[k] * y[k];
            let partner = -v[k] + 2.0 * y2;
            out.original = out.original.max((dy + y2 - v[k]).abs());
            out.partner = out.partner.max((-dy + y2 - partner).abs());
            largest_third = largest_third.max(third(k - 1).max(third(k)).max(third(k + 1)));
            largest_term = largest_term.max(v[k].abs() + y2 + (y[k + 1] - y[k - 1]).abs() / h);
            out.samples += 1;
        }
        // leading truncation term h²/6 |y'''| with headroom for the next
        // order, plus rounding in the differenced quantities
        out.stencil_bound = 1.5 * h * h / 6.0 * largest_third + 1e-9 * largest_term;
        out
    }

    /// `max |D²φ - V(z; λ) φ| / max|φ|` over interior samples, with `D²` the
    /// three-point stencil.
    pub fn deformed_schrodinger_residual(&self, lambda: f64) -> Result<f64> {
        let mode = self.deformed_mode(lambda)?;
        let v = self.isospectral_potential(lambda)?;
        Ok(schrodinger_residual(&mode, &v))
    }

    /// Same measure for the undeformed seed state.
    pub fn schrodinger_residual(&self) -> f64 {
        schrodinger_residual(&self.psi, &self.potential)
    }

    /// Sup-norm distance of the deformed objects from the seed ones.
    pub fn recovery(&self, lambda: f64) -> Result<Recovery> {
        let v = self.isospectral_potential(lambda)?;
        let mode = self.deformed_mode(lambda)?;
        Ok(Recovery {
            potential: sup_distance(v.values(), self.potential.values()),
            mode: sup_distance(mode.values(), self.psi.values()),
        })
    }

    /// `max_k |V(-z_k; λ) - V(z_k; -(1 + λ))|`, both read from this table.
    ///
    /// Needs an even problem on a grid symmetric about the origin.
    pub fn reflection_defect(&self, lambda: f64) -> Result<f64> {
        if !self.spec.is_symmetric() {
            return Err(Error::Config(format!(
                "{} has no reflection symmetry",
                self.spec
            )));
        }
        let grid = self.grid();
        if (grid.z_min() + grid.z_max()).abs() > 1e-12 * (grid.z_max() - grid.z_min()) {
            return Err(Error::Config(
                "reflection needs a grid symmetric about 0".into(),
            ));
        }
        let forward = self.isospectral_potential(lambda)?;
        let mirrored = self.isospectral_potential(-(1.0 + lambda))?;
        let a = forward.values();
        let b = mirrored.values();
        let n = a.len();
        Ok((0..n)
            .map(|k| (a[n - 1 - k] - b[k]).abs())
            .fold(0.0, f64::max))
    }

    /// Whether the seed spec lives on the full line.
    pub fn is_full_line(&self) -> bool {
        self.spec.kind() == ProblemKind::Oscillator
    }
}

fn sup_distance(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

fn schrodinger_residual(mode: &SampledCurve, v: &SampledCurve) -> f64 {
    let d2 = second_derivative(mode);
    let m = mode.values();
    let pot = v.values();
    let worst = (1..m.len() - 1)
        .map(|k| (d2.values()[k] - pot[k] * m[k]).abs())
        .fold(0.0, f64::max);
    worst / mode.max_abs()
}

/// A set of deformations of one seed state, in input order.
#[derive(Debug, Clone, PartialEq)]
pub struct LambdaFamily {
    base: StateTable,
    lambdas: Vec<f64>,
    potentials: Vec<SampledCurve>,
    modes: Vec<SampledCurve>,
}

impl LambdaFamily {
    /// Deform `base` for every λ; each λ must be admissible and give a mode
    /// normalized within [`MAX_NORM_DEFECT`].
    pub fn build(base: StateTable, lambdas: &[f64]) -> Result<Self> {
        let mut potentials = Vec::with_capacity(lambdas.len());
        let mut modes = Vec::with_capacity(lambdas.len());
        for &lambda in lambdas {
            potentials.push(base.isospectral_potential(lambda)?);
            let norm = base.mode_norm(lambda)?;
            if (norm - 1.0).abs() > MAX_NORM_DEFECT {
                return Err(Error::Normalization(format!(
                    "deformed mode at lambda = {lambda} has norm {norm}"
                )));
            }
            modes.push(base.deformed_mode(lambda)?);
        }
        Ok(Self {
            base,
            lambdas: lambdas.to_vec(),
            potentials,
            modes,
        })
    }

    pub fn base(&self) -> &StateTable {
        &self.base
    }

    pub fn lambdas(&self) -> &[f64] {
        &self.lambdas
    }

    pub fn potentials(&self) -> &[SampledCurve] {
        &self.potentials
    }

    pub fn modes(&self) -> &[SampledCurve] {
        &self.modes
    }

    /// `(λ, V(·; λ), φ(·; λ))` triples.
    pub fn iter(&self) -> impl Iterator<Item = (f64, &SampledCurve, &SampledCurve)> {
        self.lambdas
            .iter()
            .zip(&self.potentials)
            .zip(&self.modes)
            .map(|((l, v), m)| (*l, v, m))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{count_local_minima, make_grid};
    use std::f64::consts::{FRAC_1_SQRT_2, PI};

    fn oscillator(n: u32) -> StateTable {
        let spec = ProblemSpec::oscillator(n);
        build_state(&spec, &spec.default_grid()).unwrap()
    }

    #[test]
    fn admissibility() {
        assert!(admissible(0.5));
        assert!(!admissible(-0.5));
        assert!(admissible(-2.0));
        assert!(!admissible(0.0));
        assert!(!admissible(-1.0));
        assert!(!admissible(f64::NAN));
        assert!(!admissible(f64::INFINITY));
    }

    #[test]
    fn inadmissible_lambda_is_rejected() {
        let s = oscillator(0);
        assert_eq!(
            s.isospectral_potential(-0.5),
            Err(Error::InadmissibleLambda(-0.5))
        );
        assert_eq!(s.deformed_mode(0.0), Err(Error::InadmissibleLambda(0.0)));
        assert!(s.deformed_schrodinger_residual(-1.0).is_err());
    }

    #[test]
    fn ground_state_integral_midpoint() {
        let s = oscillator(0);
        let mid = s.grid().nearest_index(0.0);
        assert!((s.integral().values()[mid] - 0.5).abs() < 1e-12);
    }

    #[test]
    fn square_well_integral_closed_form() {
        let spec = ProblemSpec::square_well(1, 2.0).unwrap();
        let s = build_state(&spec, &spec.default_grid()).unwrap();
        for (k, &i) in s.integral().values().iter().enumerate() {
            let z = s.grid().point(k);
            let exact = z / 2.0 + 0.5 + (PI * z).sin() / (2.0 * PI);
            assert!((i - exact).abs() < 1e-12, "z={z}");
        }
    }

    #[test]
    fn hydrogen_integral_closed_form() {
        let spec = ProblemSpec::hydrogen(1, 0).unwrap();
        let s = build_state(&spec, &spec.default_grid()).unwrap();
        let k = s.grid().nearest_index(1.0);
        let r = s.grid().point(k);
        let exact = 1.0 - (-2.0 * r).exp() * (1.0 + 2.0 * r + 2.0 * r * r);
        // grid starts at r_min, so the table misses the mass below it
        let r0 = crate::problems::HYDROGEN_R_MIN;
        let below = 1.0 - (-2.0 * r0).exp() * (1.0 + 2.0 * r0 + 2.0 * r0 * r0);
        let err = (s.integral().values()[k] + below - exact).abs();
        // Simpson truncation, O(h^4)
        assert!(err < 1e-9, "{err:e} at r={r}");
        assert!((exact - 0.323_323_583_816_936_5).abs() < 1e-3);
    }

    #[test]
    fn integral_is_increasing_where_psi_nonzero() {
        for n in [0, 3] {
            let s = oscillator(n);
            let i = s.integral().values();
            for k in 1..i.len() {
                assert!(i[k] >= i[k - 1]);
            }
        }
    }

    #[test]
    fn build_state_rejects_short_domain() {
        let spec = ProblemSpec::oscillator(1);
        let g = make_grid(-3.0, 10.0, 2601).unwrap();
        assert!(matches!(
            build_state(&spec, &g),
            Err(Error::Normalization(_))
        ));
        let g = make_grid(-10.0, 2.0, 2401).unwrap();
        assert!(matches!(
            build_state(&spec, &g),
            Err(Error::Normalization(_))
        ));
    }

    #[test]
    fn deformed_potential_at_origin() {
        let s = oscillator(0);
        let v = s.isospectral_potential(1.0).unwrap();
        let k = s.grid().nearest_index(0.0);
        // -1 + 2 (1/pi) / 1.5^2
        assert!((v.values()[k] - (-0.717_057_878_947_741_6)).abs() < 1e-9);
    }

    #[test]
    fn expanded_formula_matches_log_second_difference() {
        // independent route: stencil of ln(I + λ) built from the same table
        let s = oscillator(2);
        for lambda in [1.0, -2.0] {
            let v = s.isospectral_potential(lambda).unwrap();
            let log = SampledCurve::new(
                *s.grid(),
                s.integral()
                    .values()
                    .iter()
                    .map(|i| (i + lambda).abs().ln())
                    .collect(),
            )
            .unwrap();
            let d2 = second_derivative(&log);
            for k in 1..s.grid().n_points() - 1 {
                let fd = s.potential().values()[k] - 2.0 * d2.values()[k];
                assert!((fd - v.values()[k]).abs() < 1e-4, "k={k}");
            }
        }
    }

    #[test]
    fn deformed_mode_at_origin() {
        let s = oscillator(0);
        let m = s.deformed_mode(1.0).unwrap();
        let k = s.grid().nearest_index(0.0);
        assert!((m.values()[k] - 0.708_167_954_684_797_9).abs() < 1e-9);
    }

    #[test]
    fn large_lambda_recovers_seed() {
        for s in [oscillator(0), oscillator(3)] {
            let r = s.recovery(1e6).unwrap();
            let bound = 4.0
                * s.psi()
                    .values()
                    .iter()
                    .zip(s.dpsi().values())
                    .map(|(p, d)| (p * d).abs())
                    .fold(0.0, f64::max)
                / 1e6;
            assert!(r.potential <= bound + 1e-12);
            assert!(r.mode < 1e-5);
        }
    }

    #[test]
    fn excited_seeds_split_into_n_plus_one_wells() {
        for n in [2, 3] {
            let s = oscillator(n);
            for lambda in [0.05, 0.5, -1.1] {
                let v = s.isospectral_potential(lambda).unwrap();
                assert_eq!(
                    count_local_minima(&v),
                    n as usize + 1,
                    "n={n} lambda={lambda}"
                );
            }
        }
    }

    #[test]
    fn outer_well_merges_for_weak_deformation() {
        // the outermost well turns into a shoulder near lambda ~ 0.91 (n = 2)
        // and lambda ~ 0.73 (n = 3)
        assert_eq!(
            count_local_minima(&oscillator(2).isospectral_potential(1.0).unwrap()),
            2
        );
        assert_eq!(
            count_local_minima(&oscillator(3).isospectral_potential(1.0).unwrap()),
            3
        );
        assert_eq!(
            count_local_minima(&oscillator(2).isospectral_potential(0.9).unwrap()),
            3
        );
    }

    #[test]
    fn partner_of_ground_state() {
        let s = oscillator(0);
        let p = s.darboux_partner();
        assert!(p.poles.is_empty());
        assert_eq!(p.branch_count(), 1);
        for (z, v) in p.curve.samples() {
            assert!((v - (z * z + 1.0)).abs() < 1e-9 * (1.0 + z * z));
        }
    }

    #[test]
    fn partner_poles_at_hermite_roots() {
        let p = oscillator(2).darboux_partner();
        assert_eq!(p.poles.len(), 2);
        assert_eq!(p.branch_count(), 3);
        assert!((p.poles[0] + FRAC_1_SQRT_2).abs() < 1e-9);
        assert!((p.poles[1] - FRAC_1_SQRT_2).abs() < 1e-9);
        assert!(p.curve.has_poles());
        let h = p.curve.grid().h();
        for (z, v) in p.curve.samples() {
            let near = p.poles.iter().any(|q| (z - q).abs() <= 3.0 * h);
            assert_eq!(v.is_nan(), near, "z={z}");
        }
    }

    #[test]
    fn square_well_partner() {
        let spec = ProblemSpec::square_well(1, 1.0).unwrap();
        let s = build_state(&spec, &spec.default_grid()).unwrap();
        let p = s.darboux_partner();
        assert!(p.poles.is_empty());
        let vals = p.curve.values();
        assert!(vals[0].is_nan() && vals[vals.len() - 1].is_nan());
        assert!(vals[1..vals.len() - 1].iter().all(|v| v.is_finite()));

        let spec = ProblemSpec::square_well(2, 1.0).unwrap();
        let s = build_state(&spec, &spec.default_grid()).unwrap();
        let p = s.darboux_partner();
        assert_eq!(p.poles.len(), 1);
        assert!(p.poles[0].abs() < 1e-9);
    }

    #[test]
    fn riccati_ground_state() {
        let r = oscillator(0).riccati_residual(1e-3);
        assert!(r.original < 1e-3, "{r:?}");
        assert!((r.original - r.partner).abs() <= 1e-12 * r.original.max(1.0));
    }

    #[test]
    fn riccati_below_stencil_bound() {
        let specs = [
            ProblemSpec::oscillator(2),
            ProblemSpec::square_well(1, 1.0).unwrap(),
            ProblemSpec::square_well(3, 1.0).unwrap(),
            ProblemSpec::hydrogen(3, 0).unwrap(),
            ProblemSpec::hydrogen(2, 1).unwrap(),
        ];
        for spec in specs {
            let s = build_state(&spec, &spec.default_grid()).unwrap();
            let r = s.riccati_residual(0.05);
            assert!(r.samples > 100);
            assert!(r.original <= r.stencil_bound, "{spec}: {r:?}");
            assert!((r.original - r.partner).abs() <= 1e-9 * r.original.max(1.0));
        }
    }

    #[test]
    fn square_well_superpotential() {
        let spec = ProblemSpec::square_well(1, 1.0).unwrap();
        let s = build_state(&spec, &spec.default_grid()).unwrap();
        for (k, z) in s.grid().points().enumerate().skip(100).step_by(400).take(8) {
            let y = s.dpsi().values()[k] / s.psi().values()[k];
            assert!((y + PI * (PI * z).tan()).abs() < 1e-9 * (1.0 + y.abs()));
        }
    }

    #[test]
    fn deformed_residual_is_second_order() {
        let spec = ProblemSpec::oscillator(0);
        let coarse = build_state(&spec, &spec.default_grid()).unwrap();
        let fine = build_state(&spec, &spec.default_grid().refined()).unwrap();
        let rc = coarse.deformed_schrodinger_residual(1.0).unwrap();
        let rf = fine.deformed_schrodinger_residual(1.0).unwrap();
        assert!(rc < 1e-3);
        let ratio = rc / rf;
        assert!((3.5..=4.5).contains(&ratio), "{ratio}");
    }

    #[test]
    fn deformed_residual_tends_to_seed_residual() {
        let s = oscillator(2);
        let r = s.deformed_schrodinger_residual(1e6).unwrap();
        assert!((r - s.schrodinger_residual()).abs() < 1e-9);
    }

    #[test]
    fn reflection_identity() {
        let s = oscillator(2);
        for lambda in [0.5, 2.0] {
            assert!(s.reflection_defect(lambda).unwrap() < 1e-10);
        }
        let spec = ProblemSpec::hydrogen(1, 0).unwrap();
        let h = build_state(&spec, &spec.default_grid()).unwrap();
        assert!(h.reflection_defect(1.0).is_err());
    }

    #[test]
    fn family_keeps_order_and_normalization() {
        let fam = LambdaFamily::build(oscillator(1), &[5.0, -2.0, 0.5]).unwrap();
        assert_eq!(fam.lambdas(), &[5.0, -2.0, 0.5]);
        assert_eq!(fam.potentials().len(), 3);
        assert_eq!(fam.modes().len(), 3);
        for (lambda, v, m) in fam.iter() {
            assert_eq!(v, &fam.base().isospectral_potential(lambda).unwrap());
            assert_eq!(m, &fam.base().deformed_mode(lambda).unwrap());
        }
        assert!(LambdaFamily::build(oscillator(1), &[1.0, -0.3]).is_err());
    }
}
