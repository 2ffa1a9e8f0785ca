//! Strictly isospectral potential families.
//!
//! Starting from an eigenstate `ψ` of an exactly solvable problem (harmonic
//! oscillator, infinite square well, hydrogen radial problem), the crate
//! builds the one-parameter family of potentials
//! `V(z; λ) = V(z) - 2 D² ln(I(z) + λ)` with `I(z) = ∫ ψ²`, their normalized
//! zero modes, and the classical Darboux partner. Everything is checked
//! numerically: normalization, Riccati identities, node structure, and the
//! low spectrum of a finite-difference Hamiltonian.
//!
//! ```
//! use isospectral::{build_state, count_local_minima, ProblemSpec};
//!
//! let spec = ProblemSpec::oscillator(2);
//! let state = build_state(&spec, &spec.default_grid())?;
//! let deformed = state.isospectral_potential(0.5)?;
//! assert_eq!(count_local_minima(&deformed), 3);
//! # Ok::<(), isospectral::Error>(())
//! ```

pub mod cli;
pub mod darboux;
pub mod eigensolver;
pub mod error;
pub mod numerics;
pub mod problems;
pub mod specfun;

pub use darboux::{admissible, build_state, LambdaFamily, Partner, StateTable};
pub use eigensolver::{
    build_hamiltonian, compare_spectra, eigenvalues_lowest, SpectrumReport, TridiagonalOperator,
};
pub use error::{Error, Result};
pub use numerics::{
    count_local_minima, count_sign_changes, cumulative_integral, integrate, make_grid,
    second_derivative, Grid, SampledCurve,
};
pub use problems::{ProblemKind, ProblemSpec};
