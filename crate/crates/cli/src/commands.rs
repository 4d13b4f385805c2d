//! Implementations of the four subcommands. Each returns the process
//! exit code: 0 for success, 2 for a well-posed but inconsistent system;
//! input and usage errors bubble up as `anyhow` errors and exit 1.

use std::fs;
use std::path::Path;
use std::time::Instant;

use anyhow::{bail, ensure, Context, Result};
use gpdmf::ffls::{self, FflsMethod};
use gpdmf::fuzzy_matrix::gauss_eliminate_with;
use gpdmf::matrix::{self, RealMatrix};
use gpdmf::membership::{from_trapezoid, from_trapezoid_default, ControlPoint};
use gpdmf::sfls;
use gpdmf::solution::{SolutionSet, SolveStatus};
use gpdmf::vector::FuzzyVector;
use gpdmf::FuzzyNumber;

use crate::model::{Diagnostics, Method, Rank, RunResult, SolutionOut, SystemSpec};

fn read_spec(path: &Path) -> Result<SystemSpec> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("could not read {}", path.display()))?;
    serde_json::from_str(&text)
        .with_context(|| format!("could not parse {} as a system file", path.display()))
}

fn write_out(output: Option<&Path>, text: &str) -> Result<()> {
    match output {
        Some(path) => fs::write(path, text)
            .with_context(|| format!("could not write {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn resolve_tolerance(flag: Option<f64>, file: Option<f64>) -> Result<f64> {
    let tolerance = flag.or(file).unwrap_or(gpdmf::DEFAULT_TOLERANCE);
    ensure!(
        tolerance.is_finite() && tolerance > 0.0,
        "tolerance must be a positive number, got {tolerance}"
    );
    Ok(tolerance)
}

fn exit_code(status: SolveStatus) -> u8 {
    if status == SolveStatus::Inconsistent {
        2
    } else {
        0
    }
}

/// Solves a real-coefficient system and assembles its report.
fn solve_real(
    coeff: &RealMatrix,
    rhs: &FuzzyVector,
    method: Method,
    tolerance: f64,
) -> Result<(SolutionSet, Rank, Diagnostics)> {
    let mut diagnostics = Diagnostics { method: method.name().to_string(), ..Default::default() };
    let set = match method {
        Method::Cramer => {
            let x = sfls::cramer_solve_with(coeff, rhs, tolerance)?;
            SolutionSet::unique(x)
        }
        Method::Rref => {
            let report = matrix::rref_with(coeff, tolerance);
            diagnostics.pivot_columns = Some(report.pivot_columns);
            sfls::solve_with(coeff, rhs, tolerance)?
        }
        other => bail!(
            "method {} applies to fully fuzzy systems; use cramer or rref here",
            other.name()
        ),
    };
    let rank = match method {
        Method::Cramer => Rank::Single(coeff.cols()),
        _ => Rank::Single(sfls::classify_with(coeff, rhs, tolerance)?.rank),
    };
    if let Some(x) = &set.particular {
        diagnostics.residual_max = Some(sfls::residual(coeff, x, rhs)?);
    }
    if !set.basis.is_empty() {
        let zero = FuzzyVector::zeros(coeff.rows());
        let mut worst = 0.0_f64;
        for v in &set.basis {
            worst = worst.max(sfls::residual(coeff, v, &zero)?);
        }
        diagnostics.basis_residual_max = Some(worst);
    }
    Ok((set, rank, diagnostics))
}

pub fn run_solve(
    input: &Path,
    method: Option<Method>,
    tolerance: Option<f64>,
    output: Option<&Path>,
) -> Result<u8> {
    let spec = read_spec(input)?;
    let tolerance = resolve_tolerance(tolerance, spec.options().tolerance)?;
    let started = Instant::now();

    let (set, rank, diagnostics) = match &spec {
        SystemSpec::Sfls { a, b, options } => {
            let b = b.as_ref().context("solving needs a right-hand side \"b\"")?;
            let method = method.or(options.method).unwrap_or(Method::Rref);
            solve_real(a, b, method, tolerance)?
        }
        SystemSpec::Dual { a, b, y, z, options } => {
            let coeff = a.sub(b)?;
            let rhs = z.sub(y)?;
            let method = method.or(options.method).unwrap_or(Method::Rref);
            solve_real(&coeff, &rhs, method, tolerance)?
        }
        SystemSpec::Ffls { a, b, method: file_method, options } => {
            let b = b.as_ref().context("solving needs a right-hand side \"b\"")?;
            let requested = method.or(*file_method).or(options.method).unwrap_or(Method::FuzzyGauss);
            let fuzzy_method = match requested {
                Method::FuzzyGauss => FflsMethod::FuzzyGauss,
                Method::Coordinate => FflsMethod::Coordinate,
                other => bail!(
                    "method {} applies to real-coefficient systems; use fuzzy-gauss or coordinate here",
                    other.name()
                ),
            };
            let report = ffls::solve_detailed_with(a, b, fuzzy_method, tolerance)?;

            let mut diagnostics = Diagnostics {
                method: match report.method {
                    FflsMethod::FuzzyGauss => Method::FuzzyGauss.name().to_string(),
                    FflsMethod::Coordinate => Method::Coordinate.name().to_string(),
                },
                ..Default::default()
            };
            if let Some(elimination) = &report.elimination {
                diagnostics.pivot_columns = Some(elimination.pivot_columns.clone());
            }
            let rank = match &report.coordinates {
                Some(coords) => {
                    let ranks: Vec<usize> = coords.coordinates.iter().map(|s| s.rank).collect();
                    diagnostics.per_coordinate_ranks = Some(ranks.clone());
                    Rank::PerCoordinate(ranks)
                }
                None => Rank::Single(
                    report.elimination.as_ref().map_or(0, |e| e.pivot_columns.len()),
                ),
            };
            if let Some(note) = &report.note {
                diagnostics.notes.push(note.clone());
            }
            let set = report.solution;
            if let Some(x) = &set.particular {
                diagnostics.residual_max = Some(ffls::residual(a, x, b)?);
            }
            if !set.basis.is_empty() {
                let zero = FuzzyVector::zeros(a.rows());
                let mut worst = 0.0_f64;
                for v in &set.basis {
                    worst = worst.max(ffls::residual(a, v, &zero)?);
                }
                diagnostics.basis_residual_max = Some(worst);
            }
            (set, rank, diagnostics)
        }
    };

    let timing_ms = started.elapsed().as_secs_f64() * 1e3;
    let code = exit_code(set.status);
    let result = RunResult {
        solution: SolutionOut::from_set(set, rank),
        diagnostics,
        timing_ms,
    };
    let mut text = serde_json::to_string_pretty(&result)?;
    text.push('\n');
    write_out(output, &text)?;
    Ok(code)
}

/// Accepts either a fuzzy-number literal or a path to a JSON file that
/// holds one.
fn parse_number_argument(argument: &str) -> Result<FuzzyNumber> {
    if let Ok(n) = argument.parse::<FuzzyNumber>() {
        return Ok(n);
    }
    let path = Path::new(argument);
    if path.exists() {
        let text = fs::read_to_string(path)
            .with_context(|| format!("could not read {}", path.display()))?;
        return serde_json::from_str(&text)
            .with_context(|| format!("could not parse {} as a fuzzy number", path.display()));
    }
    bail!(
        "{argument:?} is neither a fuzzy-number literal like \"<2;2,3,0.5,0.5>\" \
         nor a path to a JSON file"
    );
}

pub fn run_sample(number: &str, samples: usize, output: Option<&Path>) -> Result<u8> {
    ensure!(samples >= 2, "need at least two sample points, got {samples}");
    let n = parse_number_argument(number)?;
    let mut csv = String::from("t,membership\n");
    for (t, value) in n.membership_samples(samples) {
        csv.push_str(&format!("{t:.6},{value:.6}\n"));
    }
    write_out(output, &csv)?;
    Ok(0)
}

pub fn run_convert(
    trapezoid: &[f64],
    left_cp: Option<&[f64]>,
    right_cp: Option<&[f64]>,
) -> Result<u8> {
    let [a, b, c, d] = trapezoid else {
        bail!("--trapezoid takes exactly four numbers a,b,c,d");
    };
    let n = match (left_cp, right_cp) {
        (None, None) => from_trapezoid_default(*a, *b, *c, *d)?,
        (Some(left), Some(right)) => {
            let [lx, ly] = left else {
                bail!("--left-cp takes exactly two numbers x,y");
            };
            let [rx, ry] = right else {
                bail!("--right-cp takes exactly two numbers x,y");
            };
            from_trapezoid(
                *a,
                *b,
                *c,
                *d,
                ControlPoint::new(*lx, *ly)?,
                ControlPoint::new(*rx, *ry)?,
            )?
        }
        _ => bail!("control points come as a pair; give both --left-cp and --right-cp"),
    };
    println!("{}", serde_json::to_string(&n)?);
    Ok(0)
}

pub fn run_rref(input: &Path, tolerance: Option<f64>, output: Option<&Path>) -> Result<u8> {
    let spec = read_spec(input)?;
    let tolerance = resolve_tolerance(tolerance, spec.options().tolerance)?;
    let mut text = match &spec {
        SystemSpec::Sfls { a, .. } => serde_json::to_string_pretty(&matrix::rref_with(a, tolerance))?,
        SystemSpec::Dual { a, b, .. } => {
            serde_json::to_string_pretty(&matrix::rref_with(&a.sub(b)?, tolerance))?
        }
        SystemSpec::Ffls { a, b, .. } => {
            let report = match b {
                Some(b) => gauss_eliminate_with(&a.hstack_vec(b)?, a.cols(), tolerance),
                None => gauss_eliminate_with(a, a.cols(), tolerance),
            };
            serde_json::to_string_pretty(&report)?
        }
    };
    text.push('\n');
    write_out(output, &text)?;
    Ok(0)
}
