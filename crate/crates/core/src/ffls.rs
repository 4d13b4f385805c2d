//! Solvers for fully fuzzy systems `Ã x̃ = b̃`.
//!
//! Two methods are provided. The elimination method reduces the augmented
//! matrix with unit-pivot row operations and, when the coefficient block
//! reaches the form `(Ĩ | B̃)`, reads the solution set off the reduced
//! system. Not every solvable system admits such a reduction: a column may
//! contain no unit entry even though the system is consistent. The
//! coordinate method has no such restriction. Because the fuzzy arithmetic
//! acts coordinatewise, the system splits into five independent real
//! systems, one per coordinate, which are solved separately and
//! reassembled; it is the authoritative general solver, and the
//! elimination method falls back to it with a diagnostic when no full
//! reduction exists.

use crate::error::{Error, Result};
use crate::fuzzy_matrix::{gauss_eliminate_with, EliminationReport, FuzzyMatrix};
use crate::matrix::{self, RealMatrix};
use crate::number::{Coordinates, FuzzyNumber};
use crate::solution::SolutionSet;
use crate::vector::FuzzyVector;

use serde::{Deserialize, Serialize};

fn check_shapes(a: &FuzzyMatrix, b: &FuzzyVector) -> Result<()> {
    if a.rows() != b.len() {
        return Err(Error::DimensionMismatch {
            what: "right-hand side length",
            expected: a.rows(),
            found: b.len(),
        });
    }
    Ok(())
}

/// Solves a reduced system with the crate default tolerance.
pub fn rref_solve(a: &FuzzyMatrix, b: &FuzzyVector) -> Result<SolutionSet> {
    rref_solve_with(a, b, crate::DEFAULT_TOLERANCE)
}

/// Solves `Ã x̃ = b̃` for a coefficient matrix already in the form
/// `(Ĩ_m | B̃)`: the particular solution is `(b̃₁, …, b̃_m, 0̃, …, 0̃)` and
/// the homogeneous space has a basis of `5(n − m)` vectors, one per free
/// slot and coordinate direction, whose pivot entries are `−B̃[k][i]·ẽ_j`.
pub fn rref_solve_with(a: &FuzzyMatrix, b: &FuzzyVector, tolerance: f64) -> Result<SolutionSet> {
    check_shapes(a, b)?;
    let m = a.rows();
    let n = a.cols();
    if n < m {
        return Err(Error::NotRref);
    }
    for i in 0..m {
        for k in 0..m {
            let want = if i == k { FuzzyNumber::ONE } else { FuzzyNumber::ZERO };
            if !a.get(i, k).approx_eq(want, tolerance) {
                return Err(Error::NotRref);
            }
        }
    }

    let mut particular = vec![FuzzyNumber::ZERO; n];
    particular[..m].copy_from_slice(&b.0);

    let mut basis = Vec::with_capacity(5 * (n - m));
    for i in 0..n - m {
        for j in 0..5 {
            let direction = FuzzyNumber::BASIS[j];
            let mut v = vec![FuzzyNumber::ZERO; n];
            v[m + i] = direction;
            for (k, slot) in v.iter_mut().enumerate().take(m) {
                *slot = -(a.get(k, m + i) * direction);
            }
            basis.push(FuzzyVector(v));
        }
    }
    Ok(SolutionSet::affine(FuzzyVector(particular), basis))
}

/// Outcome of one coordinate's real system.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CoordinateSolve {
    pub rank: usize,
    pub consistent: bool,
    /// A solution of this coordinate's real system, absent when
    /// inconsistent.
    pub particular: Option<Vec<f64>>,
    /// Real nullspace basis of this coordinate's coefficient matrix.
    pub null_basis: Vec<Vec<f64>>,
}

/// The five per-coordinate solves and their combined fuzzy solution.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CoordinateSolveReport {
    pub coordinates: [CoordinateSolve; 5],
    /// Combined solution; inconsistent when any coordinate is.
    pub solution: SolutionSet,
    /// Sum of the consistent coordinates' nullspace dimensions.
    pub total_dimension: usize,
}

/// Coordinate solve with the crate default tolerance.
pub fn coordinate_solve(a: &FuzzyMatrix, b: &FuzzyVector) -> Result<CoordinateSolveReport> {
    coordinate_solve_with(a, b, crate::DEFAULT_TOLERANCE)
}

/// Splits the system into five real systems `A⁽ᶜ⁾ v = b⁽ᶜ⁾`, one per
/// coordinate, and solves each by row reduction. The system is consistent
/// exactly when all five are; the combined particular stacks the real
/// particulars into coordinates, and each real nullspace vector becomes a
/// fuzzy direction supported on its own coordinate.
pub fn coordinate_solve_with(
    a: &FuzzyMatrix,
    b: &FuzzyVector,
    tolerance: f64,
) -> Result<CoordinateSolveReport> {
    check_shapes(a, b)?;
    let n = a.cols();

    let mut per_coordinate = Vec::with_capacity(5);
    for c in 0..5 {
        let coeff = a.coordinate_matrix(c);
        let rhs = RealMatrix::from_rows(
            &b.coordinate_column(c).iter().map(|&v| vec![v]).collect::<Vec<_>>(),
        )?;
        let report = matrix::rref_with(&coeff.hstack(&rhs)?, tolerance);
        let rank = report.pivot_columns.iter().take_while(|&&p| p < n).count();
        let consistent = rank == report.rank;
        let pivots: Vec<usize> = report.pivot_columns[..rank].to_vec();
        let particular = consistent.then(|| {
            let mut v = vec![0.0; n];
            for (k, &p) in pivots.iter().enumerate() {
                v[p] = report.rref.get(k, n);
            }
            v
        });
        let null_basis = matrix::nullspace_from_rref(&report.rref, &pivots, n);
        per_coordinate.push(CoordinateSolve {
            rank,
            consistent,
            particular,
            null_basis,
        });
    }
    let solved: [CoordinateSolve; 5] = per_coordinate
        .try_into()
        .expect("exactly five coordinates were solved");

    let total_dimension: usize = solved
        .iter()
        .filter(|s| s.consistent)
        .map(|s| n - s.rank)
        .sum();

    let solution = if solved.iter().all(|s| s.consistent) {
        let mut entries = Vec::with_capacity(n);
        for j in 0..n {
            let mut coords = [0.0; 5];
            for (c, s) in solved.iter().enumerate() {
                coords[c] = s.particular.as_ref().expect("consistent coordinate")[j];
            }
            entries.push(FuzzyNumber::from_coords(Coordinates(coords)));
        }
        let mut basis = Vec::with_capacity(total_dimension);
        for (c, s) in solved.iter().enumerate() {
            for v in &s.null_basis {
                let direction = v
                    .iter()
                    .map(|&value| {
                        let mut coords = [0.0; 5];
                        coords[c] = value;
                        FuzzyNumber::from_coords(Coordinates(coords))
                    })
                    .collect();
                basis.push(FuzzyVector(direction));
            }
        }
        SolutionSet::affine(FuzzyVector(entries), basis)
    } else {
        SolutionSet::inconsistent()
    };

    Ok(CoordinateSolveReport {
        coordinates: solved,
        solution,
        total_dimension,
    })
}

/// How to attack a fully fuzzy system.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FflsMethod {
    /// Unit-pivot elimination of the augmented matrix, falling back to the
    /// coordinate method when the reduction cannot reach `(Ĩ | B̃)` form.
    FuzzyGauss,
    /// Five independent real solves, one per coordinate.
    Coordinate,
}

/// A solve together with everything learned along the way.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FflsReport {
    pub solution: SolutionSet,
    /// The method that actually produced the solution.
    pub method: FflsMethod,
    /// Elimination trace, when the elimination method was attempted.
    pub elimination: Option<EliminationReport>,
    /// Per-coordinate detail, when the coordinate method ran.
    pub coordinates: Option<CoordinateSolveReport>,
    /// Human-readable diagnostic, set when the requested method fell back.
    pub note: Option<String>,
}

/// Solves with the crate default tolerance.
pub fn solve(a: &FuzzyMatrix, b: &FuzzyVector, method: FflsMethod) -> Result<SolutionSet> {
    Ok(solve_detailed_with(a, b, method, crate::DEFAULT_TOLERANCE)?.solution)
}

/// [`solve`] keeping the full report.
pub fn solve_detailed(a: &FuzzyMatrix, b: &FuzzyVector, method: FflsMethod) -> Result<FflsReport> {
    solve_detailed_with(a, b, method, crate::DEFAULT_TOLERANCE)
}

/// Solves `Ã x̃ = b̃` by the requested method. The elimination method
/// reduces `(Ã | b̃)` with pivots restricted to the coefficient columns;
/// when the reduction reaches `(Ĩ | B̃)` form the solution is read off
/// directly, otherwise the coordinate method takes over and the report
/// notes the fallback.
pub fn solve_detailed_with(
    a: &FuzzyMatrix,
    b: &FuzzyVector,
    method: FflsMethod,
    tolerance: f64,
) -> Result<FflsReport> {
    check_shapes(a, b)?;
    match method {
        FflsMethod::Coordinate => {
            let report = coordinate_solve_with(a, b, tolerance)?;
            Ok(FflsReport {
                solution: report.solution.clone(),
                method: FflsMethod::Coordinate,
                elimination: None,
                coordinates: Some(report),
                note: None,
            })
        }
        FflsMethod::FuzzyGauss => {
            let augmented = a.hstack_vec(b)?;
            let elimination = gauss_eliminate_with(&augmented, a.cols(), tolerance);
            if elimination.achieved_rref {
                let reduced = elimination.result.clone();
                let m = reduced.rows();
                let coeff = FuzzyMatrix::from_rows(
                    &(0..m).map(|i| reduced.row(i)[..a.cols()].to_vec()).collect::<Vec<_>>(),
                )?;
                let rhs = reduced.column(a.cols());
                let solution = rref_solve_with(&coeff, &rhs, tolerance)?;
                Ok(FflsReport {
                    solution,
                    method: FflsMethod::FuzzyGauss,
                    elimination: Some(elimination),
                    coordinates: None,
                    note: None,
                })
            } else {
                let report = coordinate_solve_with(a, b, tolerance)?;
                Ok(FflsReport {
                    solution: report.solution.clone(),
                    method: FflsMethod::Coordinate,
                    elimination: Some(elimination),
                    coordinates: Some(report),
                    note: Some(
                        "elimination could not reach an identity block with unit pivots; \
                         solved per coordinate instead"
                            .to_string(),
                    ),
                })
            }
        }
    }
}

/// Crisp reduction with the crate default tolerance.
pub fn crisp_matrix(a: &FuzzyMatrix) -> Result<RealMatrix> {
    crisp_matrix_with(a, crate::DEFAULT_TOLERANCE)
}

/// Extracts the real matrix underlying a matrix of crisp embeddings, so
/// the system can be handed to the real-coefficient solvers. Fails on the
/// first entry that is not a crisp embedding.
pub fn crisp_matrix_with(a: &FuzzyMatrix, eps: f64) -> Result<RealMatrix> {
    let mut out = RealMatrix::new(a.rows(), a.cols());
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            let entry = a.get(i, j);
            if !entry.is_crisp_with(eps) {
                return Err(Error::NotCrispEntry { row: i, col: j });
            }
            out.set(i, j, entry.x());
        }
    }
    Ok(out)
}

/// Largest coordinate magnitude of `Ã x̃ − b̃`.
pub fn residual(a: &FuzzyMatrix, x: &FuzzyVector, b: &FuzzyVector) -> Result<f64> {
    let image = a.mat_vec(x)?;
    Ok(image.sub(b)?.max_abs_coord())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solution::SolveStatus;

    fn num(x: f64, dm: f64, dp: f64, mm: f64, mp: f64) -> FuzzyNumber {
        FuzzyNumber::new(x, dm, dp, mm, mp).unwrap()
    }

    fn example_system() -> (FuzzyMatrix, FuzzyVector) {
        let a = FuzzyMatrix::from_rows(&[
            vec![
                num(2.0, 2.0, 3.0, 0.5, 0.5),
                num(4.0, 1.2, 1.4, 1.0, 1.0),
                num(6.0, 0.8, 1.3, 1.5, 1.5),
            ],
            vec![
                num(1.0, 0.8, 1.2, 1.0, 1.0),
                num(2.0, 0.9, 1.1, 2.0, 2.0),
                num(3.0, 1.0, 1.2, 2.0, 2.0),
            ],
            vec![
                num(4.0, 1.4, 1.3, 2.5, 2.5),
                num(8.0, 1.5, 1.3, 5.0, 5.0),
                num(12.0, 1.2, 1.4, 5.5, 5.5),
            ],
        ])
        .unwrap();
        let b = FuzzyVector(vec![
            num(2.0, 1.1, 1.0, 0.5, 0.5),
            num(1.0, 1.1, 0.9, 1.0, 1.0),
            num(4.0, 1.3, 1.0, 2.5, 2.5),
        ]);
        (a, b)
    }

    #[test]
    fn rref_solve_reads_off_the_reduced_system() {
        let a = FuzzyMatrix::from_rows(&[vec![FuzzyNumber::ONE, FuzzyNumber::crisp(2.0)]]).unwrap();
        let b = FuzzyVector(vec![num(3.0, 1.5, 0.5, -1.0, 2.0)]);
        let set = rref_solve(&a, &b).unwrap();
        assert_eq!(set.status, SolveStatus::Affine);
        assert_eq!(set.dimension, 5);
        let p = set.particular.as_ref().unwrap();
        assert_eq!(p[0], b[0]);
        assert_eq!(p[1], FuzzyNumber::ZERO);

        let first = &set.basis[0];
        assert!((first[0].x() + 2.0).abs() < 1e-12);
        assert!((first[0].d_minus() - 1.0).abs() < 1e-12);
        assert!((first[0].d_plus() - 1.0).abs() < 1e-12);
        assert_eq!(first[0].mu_minus(), 0.0);
        assert_eq!(first[1], FuzzyNumber::BASIS[0]);

        for v in &set.basis {
            assert!(residual(&a, v, &FuzzyVector::zeros(1)).unwrap() < 1e-12);
        }
        assert!(residual(&a, p, &b).unwrap() < 1e-12);
    }

    #[test]
    fn rref_solve_with_zero_block_gives_unit_slot_directions() {
        let mut a = FuzzyMatrix::identity(2);
        a = a.hstack_vec(&FuzzyVector::zeros(2)).unwrap();
        let b = FuzzyVector(vec![FuzzyNumber::ONE, FuzzyNumber::ZERO]);
        let set = rref_solve(&a, &b).unwrap();
        assert_eq!(set.dimension, 5);
        for (j, v) in set.basis.iter().enumerate() {
            assert_eq!(v[0], FuzzyNumber::ZERO);
            assert_eq!(v[1], FuzzyNumber::ZERO);
            assert_eq!(v[2], FuzzyNumber::BASIS[j]);
        }
    }

    #[test]
    fn rref_solve_rejects_non_identity_blocks() {
        // reduced rows printed for the worked 3×3 example: the (2,2) entry
        // is not the fuzzy one, so the identity-block hypothesis fails
        let a = FuzzyMatrix::from_rows(&[
            vec![
                num(1.0, std::f64::consts::E, std::f64::consts::E, 1.0, 1.0),
                num(2.0, 0.392, 1.340, 2.0, 2.0),
                FuzzyNumber::ZERO,
            ],
            vec![
                FuzzyNumber::ZERO,
                num(0.0, 0.978, 0.922, 0.0, 0.0),
                num(1.0, std::f64::consts::E, std::f64::consts::E, 1.0, 1.0),
            ],
        ])
        .unwrap();
        let b = FuzzyVector(vec![num(1.0, 0.930, 1.250, 1.0, 1.0), num(0.0, 1.100, 0.830, 0.0, 0.0)]);
        assert!(matches!(rref_solve(&a, &b), Err(Error::NotRref)));

        let tall = FuzzyMatrix::identity(2);
        let narrow = FuzzyMatrix::from_rows(&[vec![FuzzyNumber::ONE], vec![FuzzyNumber::ZERO]]).unwrap();
        assert!(matches!(
            rref_solve(&narrow, &FuzzyVector::zeros(2)),
            Err(Error::NotRref)
        ));
        assert!(rref_solve(&tall, &FuzzyVector::zeros(2)).is_ok());
    }

    #[test]
    fn coordinate_solve_inverts_the_identity() {
        let b = FuzzyVector(vec![num(2.0, 2.0, 3.0, 0.5, 0.5), num(-1.0, 1.5, 0.5, 2.0, -2.0)]);
        let report = coordinate_solve(&FuzzyMatrix::identity(2), &b).unwrap();
        assert_eq!(report.solution.status, SolveStatus::Unique);
        assert_eq!(report.total_dimension, 0);
        assert!(report.solution.particular.as_ref().unwrap().approx_eq(&b, 1e-12));
        for s in &report.coordinates {
            assert_eq!(s.rank, 2);
            assert!(s.consistent);
            assert!(s.null_basis.is_empty());
        }
    }

    #[test]
    fn coordinate_solve_divides_a_scalar_system() {
        let e = std::f64::consts::E;
        let a = FuzzyMatrix::from_rows(&[vec![num(2.0, e, e, 1.0, 1.0)]]).unwrap();
        let b = FuzzyVector(vec![num(4.0, e, e, 1.0, 1.0)]);
        let report = coordinate_solve(&a, &b).unwrap();
        assert_eq!(report.solution.status, SolveStatus::Unique);
        let x = report.solution.particular.unwrap();
        assert!(x[0].approx_eq(num(2.0, e, e, 1.0, 1.0), 1e-12));
    }

    #[test]
    fn example_system_splits_into_uneven_coordinate_ranks() {
        let (a, b) = example_system();
        let report = coordinate_solve(&a, &b).unwrap();
        let ranks: Vec<usize> = report.coordinates.iter().map(|s| s.rank).collect();
        assert_eq!(ranks, vec![1, 3, 3, 2, 2]);
        assert!(report.coordinates.iter().all(|s| s.consistent));
        assert_eq!(report.total_dimension, 4);
        assert_eq!(report.solution.status, SolveStatus::Affine);
        assert_eq!(report.solution.dimension, 4);

        let p = report.solution.particular.as_ref().unwrap();
        assert!(residual(&a, p, &b).unwrap() < 1e-9);
        for v in &report.solution.basis {
            assert!(residual(&a, v, &FuzzyVector::zeros(3)).unwrap() < 1e-9);
        }
        for (c, s) in report.coordinates.iter().enumerate() {
            let col = p.coordinate_column(c);
            for (want, got) in s.particular.as_ref().unwrap().iter().zip(col) {
                assert!((want - got).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn mixed_coordinate_ranks_in_a_single_entry() {
        let zd = num(0.0, 1.0, 1.0, -1.0, 0.0);
        let a = FuzzyMatrix::from_rows(&[vec![zd]]).unwrap();

        let solvable = coordinate_solve(&a, &FuzzyVector(vec![zd])).unwrap();
        assert_eq!(solvable.solution.status, SolveStatus::Affine);
        assert_eq!(solvable.total_dimension, 4);
        let x = solvable.solution.particular.unwrap();
        assert!(residual(&a, &x, &FuzzyVector(vec![zd])).unwrap() < 1e-12);

        let unsolvable = coordinate_solve(&a, &FuzzyVector(vec![FuzzyNumber::ONE])).unwrap();
        assert_eq!(unsolvable.solution.status, SolveStatus::Inconsistent);
        assert!(!unsolvable.coordinates[0].consistent);
        assert!(unsolvable.coordinates[3].consistent);
        assert_eq!(unsolvable.total_dimension, 0);
    }

    #[test]
    fn elimination_method_solves_a_reducible_system() {
        let e = std::f64::consts::E;
        let a = FuzzyMatrix::from_rows(&[vec![num(2.0, e, e, 1.0, 1.0)]]).unwrap();
        let b = FuzzyVector(vec![num(4.0, e, e, 1.0, 1.0)]);
        let report = solve_detailed(&a, &b, FflsMethod::FuzzyGauss).unwrap();
        assert_eq!(report.method, FflsMethod::FuzzyGauss);
        assert!(report.note.is_none());
        assert!(report.elimination.as_ref().unwrap().achieved_rref);
        let x = report.solution.particular.unwrap();
        assert!(x[0].approx_eq(num(2.0, e, e, 1.0, 1.0), 1e-12));

        let by_coordinate = solve(&a, &b, FflsMethod::Coordinate).unwrap();
        assert!(by_coordinate.particular.unwrap().approx_eq(&x, 1e-9));
    }

    #[test]
    fn elimination_method_falls_back_on_the_example_system() {
        let (a, b) = example_system();
        let report = solve_detailed(&a, &b, FflsMethod::FuzzyGauss).unwrap();
        assert_eq!(report.method, FflsMethod::Coordinate);
        assert!(report.note.is_some());
        let elimination = report.elimination.as_ref().unwrap();
        assert!(!elimination.achieved_rref);
        assert_eq!(elimination.pivot_columns, vec![0]);
        assert_eq!(report.solution.status, SolveStatus::Affine);
        assert_eq!(report.solution.dimension, 4);
    }

    #[test]
    fn inconsistent_cores_are_detected_by_both_methods() {
        let a = FuzzyMatrix::from_rows(&[vec![FuzzyNumber::ONE], vec![FuzzyNumber::ONE]]).unwrap();
        let b = FuzzyVector(vec![FuzzyNumber::ONE, FuzzyNumber::ZERO]);
        for method in [FflsMethod::FuzzyGauss, FflsMethod::Coordinate] {
            let set = solve(&a, &b, method).unwrap();
            assert_eq!(set.status, SolveStatus::Inconsistent);
        }
    }

    #[test]
    fn crisp_matrices_reduce_to_their_real_parts() {
        let only = FuzzyMatrix::from_rows(&[vec![FuzzyNumber::crisp(2.0)]]).unwrap();
        let reduced = crisp_matrix(&only).unwrap();
        assert_eq!(reduced.get(0, 0), 2.0);

        let a = FuzzyMatrix::from_rows(&[
            vec![FuzzyNumber::crisp(1.0), FuzzyNumber::crisp(-3.0)],
            vec![FuzzyNumber::crisp(0.0), FuzzyNumber::crisp(2.0)],
        ])
        .unwrap();
        let r = crisp_matrix(&a).unwrap();
        assert_eq!(Vec::<Vec<f64>>::from(r.clone()), vec![vec![1.0, -3.0], vec![0.0, 2.0]]);

        let not = FuzzyMatrix::from_rows(&[vec![num(2.0, 2.0, 3.0, 0.5, 0.5)]]).unwrap();
        assert!(matches!(
            crisp_matrix(&not),
            Err(Error::NotCrispEntry { row: 0, col: 0 })
        ));
    }

    #[test]
    fn crisp_systems_match_the_real_coefficient_solver() {
        let a = FuzzyMatrix::from_rows(&[
            vec![FuzzyNumber::crisp(1.0), FuzzyNumber::crisp(-3.0)],
            vec![FuzzyNumber::crisp(0.0), FuzzyNumber::crisp(2.0)],
        ])
        .unwrap();
        let b = FuzzyVector(vec![num(1.0, 2.0, 0.5, 1.5, -0.5), num(4.0, 1.0, 3.0, 2.0, 1.0)]);
        let reduced = crisp_matrix(&a).unwrap();
        let real_solution = crate::sfls::solve(&reduced, &b).unwrap();
        let x = real_solution.particular.unwrap();
        assert!(residual(&a, &x, &b).unwrap() < 1e-9);

        let fuzzy_solution = solve(&a, &b, FflsMethod::Coordinate).unwrap();
        assert!(fuzzy_solution.particular.unwrap().approx_eq(&x, 1e-9));
    }
}
