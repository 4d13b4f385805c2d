//! Solution sets of fuzzy linear systems.
//!
//! A consistent system has either a unique solution or an affine family
//! `particular + span(basis)` whose dimension counts real degrees of
//! freedom in coordinate space.

use crate::vector::FuzzyVector;

use serde::{Deserialize, Serialize};

/// Classification of a linear system.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SolveStatus {
    Unique,
    Affine,
    Inconsistent,
}

/// A solution set: nothing for an inconsistent system, otherwise a
/// particular solution plus a basis of the homogeneous solution space.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SolutionSet {
    pub status: SolveStatus,
    /// One solution of the system, absent when inconsistent.
    pub particular: Option<FuzzyVector>,
    /// Basis of the homogeneous solutions; empty when the solution is
    /// unique or the system is inconsistent.
    pub basis: Vec<FuzzyVector>,
    /// Real dimension of the solution family (the basis length).
    pub dimension: usize,
}

impl SolutionSet {
    pub fn unique(particular: FuzzyVector) -> Self {
        SolutionSet {
            status: SolveStatus::Unique,
            particular: Some(particular),
            basis: Vec::new(),
            dimension: 0,
        }
    }

    pub fn affine(particular: FuzzyVector, basis: Vec<FuzzyVector>) -> Self {
        let dimension = basis.len();
        SolutionSet {
            status: if dimension == 0 {
                SolveStatus::Unique
            } else {
                SolveStatus::Affine
            },
            particular: Some(particular),
            basis,
            dimension,
        }
    }

    pub fn inconsistent() -> Self {
        SolutionSet {
            status: SolveStatus::Inconsistent,
            particular: None,
            basis: Vec::new(),
            dimension: 0,
        }
    }

    pub fn is_consistent(&self) -> bool {
        self.status != SolveStatus::Inconsistent
    }
}
