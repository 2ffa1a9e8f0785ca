//! Three-point finite-difference Hamiltonians and their low spectra.
//!
//! `H = -D² + V` is discretized on the interior samples of a grid with
//! Dirichlet conditions at both ends. Eigenvalues come from Sturm-sequence
//! counting and bisection, so each one is located independently.

use crate::darboux::build_state;
use crate::error::{Error, Result};
use crate::numerics::{Grid, SampledCurve};
use crate::problems::ProblemSpec;

const MAX_BISECTIONS: usize = 200;

/// Symmetric tridiagonal matrix of `-D² + V` on interior samples.
#[derive(Debug, Clone, PartialEq)]
pub struct TridiagonalOperator {
    diagonal: Vec<f64>,
    off_diagonal: f64,
    h: f64,
}

impl TridiagonalOperator {
    /// Operator with a constant off-diagonal.
    pub fn new(diagonal: Vec<f64>, off_diagonal: f64, h: f64) -> Result<Self> {
        if diagonal.is_empty() {
            return Err(Error::InvalidGrid("operator needs at least one row".into()));
        }
        if let Some(index) = diagonal.iter().position(|d| !d.is_finite()) {
            return Err(Error::NonFinite { index });
        }
        if off_diagonal == 0.0 || !off_diagonal.is_finite() {
            return Err(Error::InvalidGrid(format!(
                "off-diagonal must be finite and nonzero, got {off_diagonal}"
            )));
        }
        Ok(Self {
            diagonal,
            off_diagonal,
            h,
        })
    }

    pub fn diagonal(&self) -> &[f64] {
        &self.diagonal
    }

    pub fn off_diagonal(&self) -> f64 {
        self.off_diagonal
    }

    pub fn h(&self) -> f64 {
        self.h
    }

    /// Interior point count, i.e. the matrix order.
    pub fn len(&self) -> usize {
        self.diagonal.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diagonal.is_empty()
    }

    /// Number of eigenvalues strictly below `t`: the negative pivots of the
    /// `LDLᵀ` factorization of `T - t`.
    pub fn count_below(&self, t: f64) -> usize {
        let e2 = self.off_diagonal * self.off_diagonal;
        let pivmin = f64::MIN_POSITIVE * e2.max(1.0);
        let mut count = 0;
        let mut q = 1.0;
        for (i, &d) in self.diagonal.iter().enumerate() {
            q = if i == 0 { d - t } else { d - t - e2 / q };
            if q.abs() < pivmin {
                q = -pivmin;
            }
            if q < 0.0 {
                count += 1;
            }
        }
        count
    }

    /// Gershgorin interval enclosing the spectrum.
    pub fn gershgorin(&self) -> (f64, f64) {
        let r = 2.0 * self.off_diagonal.abs();
        let lo = self.diagonal.iter().copied().fold(f64::INFINITY, f64::min) - r;
        let hi = self
            .diagonal
            .iter()
            .copied()
            .fold(f64::NEG_INFINITY, f64::max)
            + r;
        (lo, hi)
    }

    /// `index`-th smallest eigenvalue (zero based) by bisection.
    fn eigenvalue(&self, index: usize, (mut lo, mut hi): (f64, f64)) -> f64 {
        for _ in 0..MAX_BISECTIONS {
            let mid = 0.5 * (lo + hi);
            let width = hi - lo;
            if width <= 1e-12_f64.max(4.0 * f64::EPSILON * lo.abs().max(hi.abs()))
                || mid <= lo
                || mid >= hi
            {
                break;
            }
            if self.count_below(mid) > index {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        0.5 * (lo + hi)
    }
}

/// `-D² + V` on the interior of `v`'s grid, Dirichlet at both ends.
pub fn build_hamiltonian(v: &SampledCurve) -> Result<TridiagonalOperator> {
    let grid = v.grid();
    let h = grid.h();
    let values = v.values();
    let interior = &values[1..values.len() - 1];
    if let Some(i) = interior.iter().position(|x| !x.is_finite()) {
        return Err(Error::NonFinite { index: i + 1 });
    }
    let inv_h2 = 1.0 / (h * h);
    let diagonal = interior.iter().map(|x| 2.0 * inv_h2 + x).collect();
    TridiagonalOperator::new(diagonal, -inv_h2, h)
}

/// The `k` smallest eigenvalues, ascending.
pub fn eigenvalues_lowest(op: &TridiagonalOperator, k: usize) -> Result<Vec<f64>> {
    if k == 0 || k > op.len() {
        return Err(Error::EigenvalueCount {
            requested: k,
            size: op.len(),
        });
    }
    let bounds = op.gershgorin();
    Ok((0..k).map(|i| op.eigenvalue(i, bounds)).collect())
}

/// Paired low spectra of a seed potential and one of its deformations.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumReport {
    pub lambda: f64,
    pub original: Vec<f64>,
    pub deformed: Vec<f64>,
    pub deviations: Vec<f64>,
    pub max_deviation: f64,
}

impl SpectrumReport {
    pub fn new(lambda: f64, original: Vec<f64>, deformed: Vec<f64>) -> Self {
        let deviations: Vec<f64> = original
            .iter()
            .zip(&deformed)
            .map(|(a, b)| (a - b).abs())
            .collect();
        let max_deviation = deviations.iter().copied().fold(0.0, f64::max);
        Self {
            lambda,
            original,
            deformed,
            deviations,
            max_deviation,
        }
    }
}

/// Solve `-D² + V` and `-D² + V(·; λ)` on the same grid and compare the `k`
/// lowest levels.
pub fn compare_spectra(
    spec: &ProblemSpec,
    grid: &Grid,
    lambda: f64,
    k: usize,
) -> Result<SpectrumReport> {
    let state = build_state(spec, grid)?;
    let deformed = state.isospectral_potential(lambda)?;
    let original = eigenvalues_lowest(&build_hamiltonian(state.potential())?, k)?;
    let deformed = eigenvalues_lowest(&build_hamiltonian(&deformed)?, k)?;
    Ok(SpectrumReport::new(lambda, original, deformed))
}
