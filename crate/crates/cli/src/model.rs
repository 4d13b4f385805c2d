//! On-disk formats: the system description read from input files and the
//! run report written back out.

use gpdmf::fuzzy_matrix::FuzzyMatrix;
use gpdmf::matrix::RealMatrix;
use gpdmf::solution::{SolutionSet, SolveStatus};
use gpdmf::vector::FuzzyVector;
use serde::{Deserialize, Serialize};

/// Solver selection, shared between the command line and system files.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// Determinant-ratio solve for square real-coefficient systems.
    Cramer,
    /// Row reduction of the real coefficient matrix.
    Rref,
    /// Row reduction of the fuzzy matrix itself, with unit pivots.
    FuzzyGauss,
    /// Five independent real solves, one per coordinate.
    Coordinate,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Cramer => "cramer",
            Method::Rref => "rref",
            Method::FuzzyGauss => "fuzzy-gauss",
            Method::Coordinate => "coordinate",
        }
    }
}

/// Optional knobs a system file may carry alongside the data.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Options {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub method: Option<Method>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
}

impl Options {
    pub fn is_empty(&self) -> bool {
        *self == Options::default()
    }
}

/// A linear system as stored in an input file. The right-hand side is
/// optional so that plain matrix files can be row reduced; solving
/// requires it.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum SystemSpec {
    Sfls {
        #[serde(rename = "A")]
        a: RealMatrix,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        b: Option<FuzzyVector>,
        #[serde(default, skip_serializing_if = "Options::is_empty")]
        options: Options,
    },
    Dual {
        #[serde(rename = "A")]
        a: RealMatrix,
        #[serde(rename = "B")]
        b: RealMatrix,
        #[serde(rename = "Y")]
        y: FuzzyVector,
        #[serde(rename = "Z")]
        z: FuzzyVector,
        #[serde(default, skip_serializing_if = "Options::is_empty")]
        options: Options,
    },
    Ffls {
        #[serde(rename = "A")]
        a: FuzzyMatrix,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        b: Option<FuzzyVector>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        method: Option<Method>,
        #[serde(default, skip_serializing_if = "Options::is_empty")]
        options: Options,
    },
}

impl SystemSpec {
    pub fn options(&self) -> &Options {
        match self {
            SystemSpec::Sfls { options, .. }
            | SystemSpec::Dual { options, .. }
            | SystemSpec::Ffls { options, .. } => options,
        }
    }
}

/// Rank of the coefficient matrix, a single number except for the
/// coordinate method where each coordinate reduces on its own.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Rank {
    Single(usize),
    PerCoordinate(Vec<usize>),
}

/// The solution in the shape promised to downstream tools.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SolutionOut {
    pub status: SolveStatus,
    pub particular: Option<FuzzyVector>,
    pub basis: Vec<FuzzyVector>,
    pub dimension: usize,
    pub rank: Rank,
}

impl SolutionOut {
    pub fn from_set(set: SolutionSet, rank: Rank) -> Self {
        SolutionOut {
            status: set.status,
            particular: set.particular,
            basis: set.basis,
            dimension: set.dimension,
            rank,
        }
    }
}

/// Everything observed while solving. Residuals are recomputed against
/// the original system after the solver returns, never copied from its
/// internals.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct Diagnostics {
    pub method: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pivot_columns: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub per_coordinate_ranks: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub residual_max: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis_residual_max: Option<f64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

/// The full report written by the solve command.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RunResult {
    pub solution: SolutionOut,
    pub diagnostics: Diagnostics,
    pub timing_ms: f64,
}

#[cfg(test)]
mod tests {
    use super::*;
    use gpdmf::FuzzyNumber;

    fn round_trip(spec: &SystemSpec) {
        let text = serde_json::to_string(spec).unwrap();
        let back: SystemSpec = serde_json::from_str(&text).unwrap();
        assert_eq!(*spec, back);
    }

    #[test]
    fn system_files_round_trip_through_serialization() {
        let a = RealMatrix::from_rows(&[vec![1.0, 2.0], vec![3.0, 4.0]]).unwrap();
        let b = FuzzyVector(vec![FuzzyNumber::ONE, FuzzyNumber::ZERO]);
        round_trip(&SystemSpec::Sfls {
            a: a.clone(),
            b: Some(b.clone()),
            options: Options { tolerance: Some(1e-10), method: Some(Method::Cramer), samples: None },
        });
        round_trip(&SystemSpec::Sfls { a: a.clone(), b: None, options: Options::default() });
        round_trip(&SystemSpec::Dual {
            a: a.clone(),
            b: a.clone(),
            y: b.clone(),
            z: b.clone(),
            options: Options::default(),
        });
        round_trip(&SystemSpec::Ffls {
            a: FuzzyMatrix::identity(2),
            b: Some(b),
            method: Some(Method::Coordinate),
            options: Options::default(),
        });
    }

    #[test]
    fn unknown_option_fields_are_rejected() {
        let text = r#"{"type":"sfls","A":[[1.0]],"options":{"tolernce":1e-9}}"#;
        assert!(serde_json::from_str::<SystemSpec>(text).is_err());
    }
}
