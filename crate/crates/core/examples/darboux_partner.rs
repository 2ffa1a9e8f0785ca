// Classical Darboux partners of excited states and their singularities.
//
// A seed with n nodes gives a partner with n poles, splitting it into n + 1
// branches.

use isospectral::{build_state, ProblemSpec};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let mut specs: Vec<ProblemSpec> = (0..=4).map(ProblemSpec::oscillator).collect();
    specs.push(ProblemSpec::square_well(2, 1.0)?);
    specs.push(ProblemSpec::square_well(3, 1.0)?);
    specs.push(ProblemSpec::hydrogen(3, 0)?);
    for spec in specs {
        let partner = build_state(&spec, &spec.default_grid())?.darboux_partner();
        let masked = partner.curve.values().iter().filter(|v| v.is_nan()).count();
        println!(
            "{spec}: {} branches, poles {:?}, {masked} masked samples",
            partner.branch_count(),
            partner.poles
        );
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
