//! Solvers for systems `A x̃ = b̃` with a real coefficient matrix `A` and a
//! fuzzy right-hand side `b̃`.
//!
//! Because the fuzzy arithmetic acts coordinatewise, such a system is five
//! real linear systems sharing the coefficient matrix. One reduction of the
//! augmented matrix `[A | coords(b̃)]` therefore classifies and solves all
//! five at once: the system is consistent exactly when no pivot lands in
//! the coordinate block, and each solved row's block holds the coordinates
//! of one solution entry.

use crate::error::{Error, Result};
use crate::matrix::{self, RealMatrix};
use crate::number::{Coordinates, FuzzyNumber};
use crate::solution::{SolutionSet, SolveStatus};
use crate::vector::{mat_vec_apply, FuzzyVector};

/// Ranks and solvability of a system, before computing any solutions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Classification {
    pub status: SolveStatus,
    /// Rank of the coefficient matrix.
    pub rank: usize,
    /// Rank of the augmented matrix `[A | coords(b̃)]`.
    pub augmented_rank: usize,
    /// Real dimension of the solution family, 0 when inconsistent.
    pub dimension: usize,
}

fn check_shapes(a: &RealMatrix, b: &FuzzyVector) -> Result<()> {
    if a.rows() != b.len() {
        return Err(Error::DimensionMismatch {
            what: "right-hand side length",
            expected: a.rows(),
            found: b.len(),
        });
    }
    Ok(())
}

fn augmented_rref(a: &RealMatrix, b: &FuzzyVector, tolerance: f64) -> Result<matrix::RrefReport> {
    check_shapes(a, b)?;
    let augmented = a.hstack(&b.coordinate_block())?;
    Ok(matrix::rref_with(&augmented, tolerance))
}

fn structural_rank(report: &matrix::RrefReport, n: usize) -> usize {
    report.pivot_columns.iter().take_while(|&&c| c < n).count()
}

/// Classifies with the crate default tolerance.
pub fn classify(a: &RealMatrix, b: &FuzzyVector) -> Result<Classification> {
    classify_with(a, b, crate::DEFAULT_TOLERANCE)
}

/// Ranks the coefficient and augmented matrices and reads off the status.
pub fn classify_with(a: &RealMatrix, b: &FuzzyVector, tolerance: f64) -> Result<Classification> {
    let report = augmented_rref(a, b, tolerance)?;
    let n = a.cols();
    let rank = structural_rank(&report, n);
    let augmented_rank = report.rank;
    let status = if augmented_rank > rank {
        SolveStatus::Inconsistent
    } else if rank == n {
        SolveStatus::Unique
    } else {
        SolveStatus::Affine
    };
    let dimension = match status {
        SolveStatus::Inconsistent => 0,
        _ => 5 * (n - rank),
    };
    Ok(Classification {
        status,
        rank,
        augmented_rank,
        dimension,
    })
}

/// Solves with the crate default tolerance.
pub fn solve(a: &RealMatrix, b: &FuzzyVector) -> Result<SolutionSet> {
    solve_with(a, b, crate::DEFAULT_TOLERANCE)
}

/// Solves `A x̃ = b̃` by one reduction of the augmented matrix. A consistent
/// system yields a particular solution (free entries set to fuzzy zero) and
/// a basis of the homogeneous solutions, five basis vectors per free
/// column, ordered by free column and then coordinate slot.
pub fn solve_with(a: &RealMatrix, b: &FuzzyVector, tolerance: f64) -> Result<SolutionSet> {
    let report = augmented_rref(a, b, tolerance)?;
    let n = a.cols();
    let rank = structural_rank(&report, n);
    if report.rank > rank {
        return Ok(SolutionSet::inconsistent());
    }

    let mut particular = vec![FuzzyNumber::ZERO; n];
    for (k, &p) in report.pivot_columns.iter().enumerate() {
        let mut coords = [0.0; 5];
        for (c, slot) in coords.iter_mut().enumerate() {
            *slot = report.rref.get(k, n + c);
        }
        particular[p] = FuzzyNumber::from_coords(Coordinates(coords));
    }

    let basis = lift_nullspace(&report, n);
    Ok(SolutionSet::affine(FuzzyVector(particular), basis))
}

/// Basis of the homogeneous solutions of `A x̃ = 0̃` with the crate default
/// tolerance.
pub fn nullspace_basis(a: &RealMatrix) -> Vec<FuzzyVector> {
    nullspace_basis_with(a, crate::DEFAULT_TOLERANCE)
}

/// Basis of the homogeneous solutions of `A x̃ = 0̃`: each real nullspace
/// vector of `A` spans five fuzzy directions, one per coordinate slot.
pub fn nullspace_basis_with(a: &RealMatrix, tolerance: f64) -> Vec<FuzzyVector> {
    let report = matrix::rref_with(a, tolerance);
    lift_nullspace(&report, a.cols())
}

fn lift_nullspace(report: &matrix::RrefReport, n: usize) -> Vec<FuzzyVector> {
    let pivots: Vec<usize> = report
        .pivot_columns
        .iter()
        .copied()
        .take_while(|&c| c < n)
        .collect();
    let real_vectors = matrix::nullspace_from_rref(&report.rref, &pivots, n);
    let mut basis = Vec::with_capacity(5 * real_vectors.len());
    for v in &real_vectors {
        for c in 0..5 {
            let entries = v
                .iter()
                .map(|&value| {
                    let mut coords = [0.0; 5];
                    coords[c] = value;
                    FuzzyNumber::from_coords(Coordinates(coords))
                })
                .collect();
            basis.push(FuzzyVector(entries));
        }
    }
    basis
}

/// Solves the dual-sided system with the crate default tolerance.
pub fn solve_dual(
    a: &RealMatrix,
    y: &FuzzyVector,
    b: &RealMatrix,
    z: &FuzzyVector,
) -> Result<SolutionSet> {
    solve_dual_with(a, y, b, z, crate::DEFAULT_TOLERANCE)
}

/// Solves `A x̃ + ỹ = B x̃ + z̃` by moving both sides together:
/// `(A − B) x̃ = z̃ − ỹ`.
pub fn solve_dual_with(
    a: &RealMatrix,
    y: &FuzzyVector,
    b: &RealMatrix,
    z: &FuzzyVector,
    tolerance: f64,
) -> Result<SolutionSet> {
    let coeff = a.sub(b)?;
    let rhs = z.sub(y)?;
    solve_with(&coeff, &rhs, tolerance)
}

/// Cramer solve with the crate default tolerance.
pub fn cramer_solve(a: &RealMatrix, b: &FuzzyVector) -> Result<FuzzyVector> {
    cramer_solve_with(a, b, crate::DEFAULT_TOLERANCE)
}

/// Solves a square invertible system by Cramer's rule: entry `j` is
/// `(det A)⁻¹ Σ_i (−1)^(i+j) det(M_ij) b̃_i`, with `M_ij` the minor of `A`
/// and the sum taken in the fuzzy arithmetic.
pub fn cramer_solve_with(a: &RealMatrix, b: &FuzzyVector, tolerance: f64) -> Result<FuzzyVector> {
    if a.rows() != a.cols() {
        return Err(Error::BadShape {
            reason: format!(
                "Cramer solve needs a square matrix, got {}x{}",
                a.rows(),
                a.cols()
            ),
        });
    }
    check_shapes(a, b)?;
    let n = a.rows();
    let det_a = matrix::det_with(a, tolerance)?;
    if det_a == 0.0 {
        return Err(Error::SingularMatrix);
    }
    let inv_det = 1.0 / det_a;
    let mut entries = Vec::with_capacity(n);
    for j in 0..n {
        let mut acc = Coordinates([0.0; 5]);
        for i in 0..n {
            let cofactor = matrix::det_with(&minor(a, i, j), tolerance)?;
            let sign = if (i + j) % 2 == 0 { 1.0 } else { -1.0 };
            acc = acc + b[i].coords().scale(sign * cofactor);
        }
        entries.push(FuzzyNumber::from_coords(acc.scale(inv_det)));
    }
    Ok(FuzzyVector(entries))
}

fn minor(a: &RealMatrix, skip_row: usize, skip_col: usize) -> RealMatrix {
    let n = a.rows();
    let mut m = RealMatrix::new(n - 1, n - 1);
    let mut r = 0;
    for i in 0..n {
        if i == skip_row {
            continue;
        }
        let mut c = 0;
        for j in 0..n {
            if j == skip_col {
                continue;
            }
            m.set(r, c, a.get(i, j));
            c += 1;
        }
        r += 1;
    }
    m
}

/// Largest coordinate magnitude of `A x̃ − b̃`.
pub fn residual(a: &RealMatrix, x: &FuzzyVector, b: &FuzzyVector) -> Result<f64> {
    let image = mat_vec_apply(a, x)?;
    Ok(image.sub(b)?.max_abs_coord())
}
