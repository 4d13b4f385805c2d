//! Command-line front end for the fuzzy linear-algebra toolkit: solve
//! system files, sample membership curves to CSV, calibrate numbers from
//! trapezoids, and row reduce matrices.
//!
//! Exit codes: 0 on success, 1 on input or usage errors, 2 when a system
//! parses cleanly but has no solution.

mod commands;
mod model;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use crate::model::Method;

#[derive(Parser)]
#[command(name = "gpdmf", version, about = "Fuzzy linear systems over the Gaussian-PDMF numbers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve a system file and write the solution report as JSON.
    Solve {
        /// System file to solve.
        #[arg(short, long)]
        input: PathBuf,
        /// Where to write the report; standard output when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Solver to use; defaults to rref for real coefficients and
        /// fuzzy-gauss for fuzzy ones.
        #[arg(long, value_enum)]
        method: Option<Method>,
        /// Zero threshold for rank decisions and unit tests.
        #[arg(long)]
        tolerance: Option<f64>,
    },
    /// Sample a membership curve and write it as CSV.
    Sample {
        /// Fuzzy-number literal like "<2;2,3,0.5,0.5>", or a path to a
        /// JSON file holding one.
        #[arg(allow_hyphen_values = true)]
        number: String,
        /// Number of sample points across the padded support.
        #[arg(long, default_value_t = 201)]
        samples: usize,
        /// Where to write the CSV; standard output when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Calibrate a fuzzy number from a trapezoid and print its five
    /// display parameters.
    Convert {
        /// Trapezoid corners a,b,c,d with a < b <= c < d.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        trapezoid: Vec<f64>,
        /// Left-branch control point x,y; defaults to a quarter of the
        /// way in from the core at ordinate 0.99.
        #[arg(long = "left-cp", value_delimiter = ',', allow_hyphen_values = true)]
        left_cp: Option<Vec<f64>>,
        /// Right-branch control point x,y.
        #[arg(long = "right-cp", value_delimiter = ',', allow_hyphen_values = true)]
        right_cp: Option<Vec<f64>>,
    },
    /// Row reduce the system matrix and write the reduction report.
    Rref {
        /// System file holding the matrix.
        #[arg(short, long)]
        input: PathBuf,
        /// Where to write the report; standard output when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Zero threshold for pivot decisions.
        #[arg(long)]
        tolerance: Option<f64>,
    },
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    match cli.command {
        Command::Solve { input, output, method, tolerance } => {
            commands::run_solve(&input, method, tolerance, output.as_deref())
        }
        Command::Sample { number, samples, output } => {
            commands::run_sample(&number, samples, output.as_deref())
        }
        Command::Convert { trapezoid, left_cp, right_cp } => {
            commands::run_convert(&trapezoid, left_cp.as_deref(), right_cp.as_deref())
        }
        Command::Rref { input, output, tolerance } => {
            commands::run_rref(&input, tolerance, output.as_deref())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(1)
        }
    }
}
