//! Uniform grids, cumulative quadrature, difference stencils and curve-shape
//! analysis shared by the rest of the crate.

use crate::error::{Error, Result};

/// Default magnitude below which samples are ignored when counting sign changes.
pub const SIGN_DEADBAND: f64 = 1e-12;

/// Uniform one-dimensional sample domain.
///
/// Sample `k` sits at exactly `z_min + k * h` for `k = 0..n_points`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    z_min: f64,
    z_max: f64,
    n_points: usize,
    h: f64,
}

impl Grid {
    pub fn new(z_min: f64, z_max: f64, n_points: usize) -> Result<Self> {
        if !z_min.is_finite() || !z_max.is_finite() {
            return Err(Error::InvalidGrid(format!(
                "bounds must be finite, got [{z_min}, {z_max}]"
            )));
        }
        if z_min >= z_max {
            return Err(Error::InvalidGrid(format!(
                "need z_min < z_max, got [{z_min}, {z_max}]"
            )));
        }
        if n_points < 3 {
            return Err(Error::InvalidGrid(format!(
                "need at least 3 points, got {n_points}"
            )));
        }
        let h = (z_max - z_min) / (n_points - 1) as f64;
        Ok(Self {
            z_min,
            z_max,
            n_points,
            h,
        })
    }

    /// Smallest odd-point grid on `[z_min, z_max]` whose spacing does not exceed `max_h`.
    pub fn with_max_spacing(z_min: f64, z_max: f64, max_h: f64) -> Result<Self> {
        if !(max_h.is_finite() && max_h > 0.0) {
            return Err(Error::InvalidGrid(format!(
                "spacing must be positive, got {max_h}"
            )));
        }
        let panels = ((z_max - z_min) / max_h).ceil().max(2.0) as usize;
        let panels = panels + panels % 2;
        Self::new(z_min, z_max, panels + 1)
    }

    /// Same interval with the spacing halved.
    pub fn refined(&self) -> Self {
        Self::new(self.z_min, self.z_max, 2 * self.n_points - 1)
            .expect("refining a valid grid keeps it valid")
    }

    pub fn z_min(&self) -> f64 {
        self.z_min
    }

    pub fn z_max(&self) -> f64 {
        self.z_max
    }

    pub fn n_points(&self) -> usize {
        self.n_points
    }

    pub fn h(&self) -> f64 {
        self.h
    }

    pub fn point(&self, k: usize) -> f64 {
        self.z_min + k as f64 * self.h
    }

    pub fn points(&self) -> impl ExactSizeIterator<Item = f64> + '_ {
        (0..self.n_points).map(move |k| self.point(k))
    }

    pub fn is_simpson_compatible(&self) -> bool {
        self.n_points % 2 == 1
    }

    /// Index of the sample nearest to `z`, clamped to the grid.
    pub fn nearest_index(&self, z: f64) -> usize {
        let k = ((z - self.z_min) / self.h).round();
        k.clamp(0.0, (self.n_points - 1) as f64) as usize
    }
}

/// Build a uniform grid.
pub fn make_grid(z_min: f64, z_max: f64, n_points: usize) -> Result<Grid> {
    Grid::new(z_min, z_max, n_points)
}

/// Real samples over a [`Grid`].
///
/// Curves built with [`SampledCurve::with_poles`] may carry NaN samples that
/// mark excluded neighbourhoods of singularities; all other curves are finite.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledCurve {
    grid: Grid,
    values: Vec<f64>,
    has_poles: bool,
}

impl SampledCurve {
    pub fn new(grid: Grid, values: Vec<f64>) -> Result<Self> {
        check_len(&grid, &values)?;
        if let Some(index) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite { index });
        }
        Ok(Self {
            grid,
            values,
            has_poles: false,
        })
    }

    /// Curve whose non-finite samples are pole markers rather than errors.
    pub fn with_poles(grid: Grid, values: Vec<f64>) -> Result<Self> {
        check_len(&grid, &values)?;
        let has_poles = values.iter().any(|v| !v.is_finite());
        Ok(Self {
            grid,
            values,
            has_poles,
        })
    }

    pub fn from_fn(grid: Grid, f: impl Fn(f64) -> f64) -> Result<Self> {
        let values = grid.points().map(f).collect();
        Self::new(grid, values)
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    pub fn has_poles(&self) -> bool {
        self.has_poles
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Largest absolute finite sample.
    pub fn max_abs(&self) -> f64 {
        self.values
            .iter()
            .filter(|v| v.is_finite())
            .fold(0.0_f64, |m, v| m.max(v.abs()))
    }

    /// `(z, value)` pairs.
    pub fn samples(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.grid.points().zip(self.values.iter().copied())
    }
}

fn check_len(grid: &Grid, values: &[f64]) -> Result<()> {
    if values.len() != grid.n_points() {
        return Err(Error::InvalidGrid(format!(
            "{} samples for a {}-point grid",
            values.len(),
            grid.n_points()
        )));
    }
    Ok(())
}

/// Running integral `I[k] = ∫_{z_0}^{z_k} f` with `I[0] = 0`.
///
/// Even indices carry the composite Simpson sum over completed panel pairs.
/// An odd index adds the single-panel integral of the parabola through the
/// next three samples, `h/12 (5 f0 + 8 f1 - f2)`, so every entry is
/// fourth-order accurate and the two halves of each pair add up to the
/// Simpson value exactly.
pub fn cumulative_integral(f: &SampledCurve) -> Result<SampledCurve> {
    let grid = *f.grid();
    if !grid.is_simpson_compatible() {
        return Err(Error::EvenPointCount(grid.n_points()));
    }
    let y = f.values();
    if let Some(index) = y.iter().position(|v| !v.is_finite()) {
        return Err(Error::NonFinite { index });
    }
    let h = grid.h();
    let mut out = vec![0.0; y.len()];
    for pair in 0..(y.len() - 1) / 2 {
        let k = 2 * pair;
        let (f0, f1, f2) = (y[k], y[k + 1], y[k + 2]);
        out[k + 1] = out[k] + h / 12.0 * (5.0 * f0 + 8.0 * f1 - f2);
        out[k + 2] = out[k] + h / 3.0 * (f0 + 4.0 * f1 + f2);
    }
    SampledCurve::new(grid, out)
}

/// Composite Simpson integral over the whole grid.
pub fn integrate(f: &SampledCurve) -> Result<f64> {
    let running = cumulative_integral(f)?;
    Ok(*running
        .values()
        .last()
        .expect("grid has at least three points"))
}

/// Second derivative by the central three-point stencil.
///
/// Endpoints use the one-sided second-order stencil
/// `(2 f0 - 5 f1 + 4 f2 - f3) / h^2` when four or more samples exist.
pub fn second_derivative(f: &SampledCurve) -> SampledCurve {
    let grid = *f.grid();
    let y = f.values();
    let n = y.len();
    let inv_h2 = 1.0 / (grid.h() * grid.h());
    let mut out = vec![0.0; n];
    for k in 1..n - 1 {
        out[k] = (y[k - 1] - 2.0 * y[k] + y[k + 1]) * inv_h2;
    }
    if n >= 4 {
        out[0] = (2.0 * y[0] - 5.0 * y[1] + 4.0 * y[2] - y[3]) * inv_h2;
        out[n - 1] = (2.0 * y[n - 1] - 5.0 * y[n - 2] + 4.0 * y[n - 3] - y[n - 4]) * inv_h2;
    } else {
        out[0] = out[1];
        out[n - 1] = out[1];
    }
    SampledCurve {
        grid,
        values: out,
        has_poles: f.has_poles(),
    }
}

/// Number of interior strict local minima.
///
/// Runs of equal samples are collapsed first, so a flat bottom flanked by
/// larger values counts once. Runs touching either end of the grid never count.
pub fn count_local_minima(f: &SampledCurve) -> usize {
    let mut runs: Vec<f64> = Vec::with_capacity(f.len());
    for &v in f.values() {
        if runs.last() != Some(&v) {
            runs.push(v);
        }
    }
    runs.windows(3)
        .filter(|w| w[0] > w[1] && w[1] < w[2])
        .count()
}

/// Sign alternations between consecutive samples whose magnitude exceeds `deadband`.
///
/// Samples at or below the deadband (and non-finite samples) are skipped, so a
/// node that lands exactly on a grid point is still counted once.
pub fn count_sign_changes(f: &SampledCurve, deadband: f64) -> usize {
    let mut count = 0;
    let mut previous: Option<bool> = None;
    for &v in f.values() {
        if !v.is_finite() || v.abs() <= deadband {
            continue;
        }
        let positive = v > 0.0;
        if let Some(p) = previous {
            if p != positive {
                count += 1;
            }
        }
        previous = Some(positive);
    }
    count
}
