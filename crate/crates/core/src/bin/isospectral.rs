use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use isospectral::cli::{
    family_csv, hydrogen_diff_csv, partner_csv, verify, GridChoice, RunConfig, DEFAULT_LAMBDAS,
    DEFAULT_SCALE,
};
use isospectral::{Error, ProblemSpec};

#[derive(Parser)]
#[command(
    version,
    about = "Strictly isospectral potential families and their checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Deformed potentials and scaled modes for each lambda.
    Family(Opts),
    /// Percentual potential and density differences for a hydrogen seed.
    HydrogenDiff(Opts),
    /// Classical Darboux partner with its pole locations.
    Partner(Opts),
    /// Run all numerical checks; exit 1 if any fails.
    Verify(Opts),
}

#[derive(Clone, Copy, ValueEnum)]
enum Problem {
    Oscillator,
    SquareWell,
    Hydrogen,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
}

#[derive(Args)]
struct Opts {
    #[arg(long, value_enum)]
    problem: Problem,
    #[arg(long, default_value_t = 0)]
    n: u32,
    #[arg(long, default_value_t = 0)]
    l: u32,
    /// Square well length.
    #[arg(long, default_value_t = 1.0)]
    length: f64,
    /// Deformation parameter; repeat for several values.
    #[arg(long = "lambda", allow_negative_numbers = true)]
    lambdas: Vec<f64>,
    #[arg(long, allow_negative_numbers = true, requires_all = ["zmax", "points"])]
    zmin: Option<f64>,
    #[arg(long, allow_negative_numbers = true, requires_all = ["zmin", "points"])]
    zmax: Option<f64>,
    #[arg(long, requires_all = ["zmin", "zmax"])]
    points: Option<usize>,
    /// Multiplier applied to mode columns.
    #[arg(long, default_value_t = DEFAULT_SCALE, allow_negative_numbers = true)]
    scale: f64,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    /// Output file; standard output when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

impl Opts {
    fn config(&self) -> Result<RunConfig, Error> {
        let problem = match self.problem {
            Problem::Oscillator => ProblemSpec::oscillator(self.n),
            Problem::SquareWell => ProblemSpec::square_well(self.n, self.length)?,
            Problem::Hydrogen => ProblemSpec::hydrogen(self.n, self.l)?,
        };
        let grid = match (self.zmin, self.zmax, self.points) {
            (Some(z_min), Some(z_max), Some(n_points)) => GridChoice::Explicit {
                z_min,
                z_max,
                n_points,
            },
            _ => GridChoice::Auto,
        };
        let lambdas = if self.lambdas.is_empty() {
            DEFAULT_LAMBDAS.to_vec()
        } else {
            self.lambdas.clone()
        };
        let Format::Csv = self.format;
        RunConfig::new(problem, lambdas, grid, self.scale)
    }

    fn emit(&self, text: &str) -> io::Result<()> {
        match &self.out {
            Some(path) => fs::write(path, text),
            None => io::stdout().lock().write_all(text.as_bytes()),
        }
    }
}

type Render = fn(&RunConfig) -> Result<String, Error>;

fn run(cli: Cli) -> Result<bool, Error> {
    let (opts, command): (&Opts, Render) = match &cli.command {
        Command::Family(o) => (o, family_csv),
        Command::HydrogenDiff(o) => (o, hydrogen_diff_csv),
        Command::Partner(o) => (o, partner_csv),
        Command::Verify(o) => {
            let report = verify(&o.config()?)?;
            let text = report.to_string();
            print!("{text}");
            if o.out.is_some() {
                o.emit(&text)?;
            }
            return Ok(report.all_passed());
        }
    };
    let text = command(&opts.config()?)?;
    opts.emit(&text)?;
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
