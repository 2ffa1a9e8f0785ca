// Finite-difference spectra of seed and deformed Hamiltonians side by side.

use isospectral::{compare_spectra, ProblemSpec};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let specs = [
        ProblemSpec::oscillator(2),
        ProblemSpec::square_well(2, 1.0)?,
        ProblemSpec::hydrogen(3, 0)?,
    ];
    for spec in specs {
        println!("{spec}: closed form {:?}", spec.closed_form_levels(4));
        for lambda in [0.5, -2.0] {
            let grid = spec.default_grid();
            let report = compare_spectra(&spec, &grid, lambda, 4)?;
            let finer = compare_spectra(&spec, &grid.refined(), lambda, 4)?;
            println!("  lambda = {lambda}");
            for (a, b) in report.original.iter().zip(&report.deformed) {
                println!("    {a:>14.8} {b:>14.8}");
            }
            println!(
                "    max deviation {:.3e}, after halving h {:.3e}",
                report.max_deviation, finer.max_deviation
            );
        }
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
