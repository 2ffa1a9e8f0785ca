// Deformations of the infinite square well.
//
// The walls stay at `±L/2`; the deformed potential develops structure inside
// the well while the normalization and node count of the mode survive.

use isospectral::{build_state, count_sign_changes, ProblemSpec};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let length = 1.0;
    for n in [1, 2, 3] {
        let spec = ProblemSpec::square_well(n, length)?;
        let state = build_state(&spec, &spec.default_grid())?;
        println!("{spec}: V = {:.6} inside the well", spec.energy_shift());
        for lambda in [0.5, 1.0, -2.0] {
            let v = state.isospectral_potential(lambda)?;
            let mode = state.deformed_mode(lambda)?;
            let (lo, hi) = v
                .values()
                .iter()
                .fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), x| {
                    (a.min(*x), b.max(*x))
                });
            println!(
                "  lambda = {lambda:>4}: V in [{lo:.3}, {hi:.3}], norm {:.12}, nodes {}",
                state.mode_norm(lambda)?,
                count_sign_changes(&mode, 1e-12)
            );
        }
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
