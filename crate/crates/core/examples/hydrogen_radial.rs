// Strictly isospectral Coulomb potentials from the R30 and R21 states.
//
// Reports where the relative potential change drops below one percent and
// how large it gets close to the nucleus.

use isospectral::{build_state, ProblemSpec};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for (n, l) in [(3, 0), (2, 1)] {
        let spec = ProblemSpec::hydrogen(n, l)?;
        let state = build_state(&spec, &spec.default_grid())?;
        let v0 = state.potential().values();
        println!(
            "{spec}: grid [{}, {}]",
            state.grid().z_min(),
            state.grid().z_max()
        );
        for lambda in [0.01, 0.5, 1.0, 5.0] {
            let v = state.isospectral_potential(lambda)?;
            let mut reach = 0.0_f64;
            let mut nuclear = 0.0_f64;
            for (k, r) in state.grid().points().enumerate() {
                if v0[k].abs() < 1e-12 {
                    continue;
                }
                let pct = 100.0 * (v.values()[k] - v0[k]) / v0[k];
                if pct.abs() >= 1.0 {
                    reach = reach.max(r);
                }
                if r <= 0.1 {
                    nuclear = nuclear.max(pct.abs());
                }
            }
            println!(
                "  lambda = {lambda:>4}: |dV/V| >= 1% out to r = {reach:.2}, up to {nuclear:.2}% for r <= 0.1"
            );
        }
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
