//! Fuzzy numbers with Gaussian-shaped membership curves, and linear
//! systems over them.
//!
//! A fuzzy number `⟨x; d⁻, d⁺, μ⁻, μ⁺⟩` has membership 1 at its core `x`,
//! membership 0 outside the support `(x − d⁻, x + d⁺)`, and on each side a
//! smooth branch obtained by composing the standard normal CDF with a
//! tangent reparameterization of the branch interval; `μ⁻` and `μ⁺` shift
//! the curve shape. The five numbers `(x, ln d⁻, ln d⁺, μ⁻, μ⁺)` are the
//! number's *coordinates*, and all arithmetic is coordinatewise: addition
//! adds coordinates, multiplication multiplies them, scalar multiplication
//! scales them. This makes the space a commutative ring with identity
//! (with zero divisors), whose unit group consists of the elements with no
//! zero coordinate.
//!
//! On top of the arithmetic the crate solves two kinds of linear system:
//!
//! * [`sfls`]: `A x̃ = b̃` with a real coefficient matrix, including dual
//!   systems `A x̃ + ỹ = B x̃ + z̃`, Cramer's rule for the square
//!   invertible case, and full solution sets (the affine family has real
//!   dimension `5(n − rank A)`);
//! * [`ffls`]: `Ã x̃ = b̃` with a fuzzy coefficient matrix, by unit-pivot
//!   Gaussian elimination when possible and otherwise by five independent
//!   real solves, one per coordinate.
//!
//! Calibration helpers in [`membership`] build numbers from trapezoidal
//! data and prescribed curve points, and [`normal`] provides the normal
//! CDF and quantile the membership curves are built from.
//!
//! ```
//! use gpdmf::{FuzzyNumber, FuzzyVector, RealMatrix, sfls};
//!
//! let two = FuzzyNumber::new(2.0, 2.0, 3.0, 0.5, 0.5)?;
//! let doubled = two + two;
//! assert_eq!(doubled.x(), 4.0);
//!
//! let a = RealMatrix::from_rows(&[vec![2.0]])?;
//! let b = FuzzyVector(vec![FuzzyNumber::new(2.0, 4.0, 9.0, 1.0, 1.0)?]);
//! let x = sfls::cramer_solve(&a, &b)?;
//! assert!(x[0].approx_eq(FuzzyNumber::new(1.0, 2.0, 3.0, 0.5, 0.5)?, 1e-12));
//! # Ok::<(), gpdmf::Error>(())
//! ```

pub mod error;
pub mod ffls;
pub mod fuzzy_matrix;
pub mod matrix;
pub mod membership;
pub mod normal;
pub mod number;
pub mod sfls;
pub mod solution;
pub mod vector;

pub use error::{Error, Result};
pub use fuzzy_matrix::{
    apply_row_op, gauss_eliminate, gauss_eliminate_with, replay_ops, EliminationReport,
    FuzzyMatrix, RowOp,
};
pub use membership::{
    from_trapezoid, from_trapezoid_default, mu_from_control_point, BranchSide, ControlPoint,
};
pub use matrix::{RealMatrix, RealRowOp, RrefReport};
pub use number::{Coordinates, FuzzyNumber};
pub use solution::{SolutionSet, SolveStatus};
pub use vector::{mat_vec_apply, FuzzyVector};

/// Threshold below which a value counts as zero: rank decisions scale it
/// by the largest entry magnitude, unit membership compares coordinates
/// against it directly.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;
