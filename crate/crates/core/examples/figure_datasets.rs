// Writes the plot datasets for all seeds shown in the figures.
//
// Usage: `cargo run --example figure_datasets [output-dir]`

use std::fs;
use std::path::{Path, PathBuf};

use isospectral::cli::{
    family_csv, hydrogen_diff_csv, partner_csv, GridChoice, RunConfig, DEFAULT_LAMBDAS,
    DEFAULT_SCALE,
};
use isospectral::ProblemSpec;

fn default_dir() -> PathBuf {
    std::env::temp_dir().join("isospectral-figures")
}

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    write_datasets(&default_dir())
}

fn write_datasets(dir: &Path) -> Result<(), Box<dyn std::error::Error>> {
    fs::create_dir_all(dir)?;
    let config = |problem| {
        RunConfig::new(
            problem,
            DEFAULT_LAMBDAS.to_vec(),
            GridChoice::Auto,
            DEFAULT_SCALE,
        )
    };

    let jobs: Vec<(&str, String)> = vec![
        (
            "oscillator_n2.csv",
            family_csv(&config(ProblemSpec::oscillator(2))?)?,
        ),
        (
            "oscillator_n3.csv",
            family_csv(&config(ProblemSpec::oscillator(3))?)?,
        ),
        (
            "square_well_n1.csv",
            family_csv(&config(ProblemSpec::square_well(1, 1.0)?)?)?,
        ),
        (
            "square_well_n2.csv",
            family_csv(&config(ProblemSpec::square_well(2, 1.0)?)?)?,
        ),
        (
            "hydrogen_30.csv",
            hydrogen_diff_csv(&config(ProblemSpec::hydrogen(3, 0)?)?)?,
        ),
        (
            "hydrogen_21.csv",
            hydrogen_diff_csv(&config(ProblemSpec::hydrogen(2, 1)?)?)?,
        ),
        (
            "partner_oscillator_n2.csv",
            partner_csv(&config(ProblemSpec::oscillator(2))?)?,
        ),
    ];
    for (name, csv) in jobs {
        let path = dir.join(name);
        fs::write(&path, &csv)?;
        println!("{} ({} rows)", path.display(), csv.lines().count() - 1);
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(default_dir);
    write_datasets(&dir)
}
