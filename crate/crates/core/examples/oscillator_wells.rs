// Multiple-well oscillator potentials from excited seeds.
//
// Deforms the n = 2 and n = 3 oscillator states and counts the wells of
// `V(z; λ)` across a sweep of λ, including the λ < -1 branch.

use isospectral::{build_state, count_local_minima, LambdaFamily, ProblemSpec};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let lambdas = [0.05, 0.2, 0.5, 0.9, 1.0, 5.0, -1.05, -2.0];
    for n in [2, 3] {
        let spec = ProblemSpec::oscillator(n);
        let family = LambdaFamily::build(build_state(&spec, &spec.default_grid())?, &lambdas)?;
        println!("{spec}: seed has {} nodes", family.base().node_count());
        for (lambda, v, _) in family.iter() {
            let min = v.values().iter().copied().fold(f64::INFINITY, f64::min);
            println!(
                "  lambda = {lambda:>6}: {} wells, deepest point {min:.4}",
                count_local_minima(v)
            );
        }
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
