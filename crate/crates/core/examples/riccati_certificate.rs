// Riccati identities of the superpotential and the deformed zero modes.
//
// `y = ψ'/ψ` must satisfy `y' + y² = V` and `-y' + y² = V₂`; the deformed
// mode must satisfy `φ'' = V(z; λ) φ`. Both are checked with difference
// stencils, so residuals shrink like h².

use isospectral::{build_state, ProblemSpec};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let specs = [
        ProblemSpec::oscillator(0),
        ProblemSpec::oscillator(3),
        ProblemSpec::square_well(1, 1.0)?,
        ProblemSpec::hydrogen(2, 1)?,
    ];
    for spec in specs {
        let grid = spec.default_grid();
        let coarse = build_state(&spec, &grid)?;
        let fine = build_state(&spec, &grid.refined())?;
        let r = coarse.riccati_residual(0.05);
        println!(
            "{spec}: riccati {:.3e} / partner {:.3e} (bound {:.3e}, {} samples)",
            r.original, r.partner, r.stencil_bound, r.samples
        );
        for lambda in [0.5, 1.0, -2.0] {
            let rc = coarse.deformed_schrodinger_residual(lambda)?;
            let rf = fine.deformed_schrodinger_residual(lambda)?;
            println!(
                "  lambda = {lambda:>4}: residual {rc:.3e}, ratio on halving {:.3}",
                rc / rf
            );
        }
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
