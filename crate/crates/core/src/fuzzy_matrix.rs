//! Fuzzy matrices and Gaussian elimination restricted to the unit group.
//!
//! Row operations mirror the real ones, with one restriction: a row may
//! only be scaled by a unit, because only units are invertible and only
//! invertible operations preserve the solution set. Pivots are therefore
//! chosen among unit entries, and a column with no unit candidate is
//! skipped; the elimination report says whether the reduction still
//! reached the form `(Ĩ | B̃)`.
//!
//! Every operation the elimination performs is recorded and applied
//! through one shared routine, so replaying `EliminationReport::ops` on
//! the input reproduces `result` bit for bit. To keep that true across
//! serialization, operation factors serialize as raw coordinate vectors
//! rather than display form.

use crate::error::{Error, Result};
use crate::matrix::RealMatrix;
use crate::number::{Coordinates, FuzzyNumber};
use crate::vector::FuzzyVector;

use serde::{Deserialize, Serialize};

/// Dense row-major matrix of fuzzy numbers.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<FuzzyNumber>>", into = "Vec<Vec<FuzzyNumber>>")]
pub struct FuzzyMatrix {
    rows: usize,
    cols: usize,
    data: Vec<FuzzyNumber>,
}

impl TryFrom<Vec<Vec<FuzzyNumber>>> for FuzzyMatrix {
    type Error = Error;

    fn try_from(rows: Vec<Vec<FuzzyNumber>>) -> Result<Self> {
        FuzzyMatrix::from_rows(&rows)
    }
}

impl From<FuzzyMatrix> for Vec<Vec<FuzzyNumber>> {
    fn from(m: FuzzyMatrix) -> Self {
        (0..m.rows).map(|i| m.row(i).to_vec()).collect()
    }
}

impl FuzzyMatrix {
    /// Matrix of fuzzy zeros.
    pub fn new(rows: usize, cols: usize) -> Self {
        FuzzyMatrix {
            rows,
            cols,
            data: vec![FuzzyNumber::ZERO; rows * cols],
        }
    }

    /// Builds a matrix from rows, requiring a rectangular input.
    pub fn from_rows(rows: &[Vec<FuzzyNumber>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != c {
                return Err(Error::BadShape {
                    reason: format!("row {i} has {} entries, expected {c}", row.len()),
                });
            }
            data.extend_from_slice(row);
        }
        Ok(FuzzyMatrix { rows: r, cols: c, data })
    }

    /// Identity matrix: fuzzy one on the diagonal, fuzzy zero elsewhere.
    pub fn identity(n: usize) -> Self {
        let mut m = FuzzyMatrix::new(n, n);
        for i in 0..n {
            m.data[i * n + i] = FuzzyNumber::ONE;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> FuzzyNumber {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: FuzzyNumber) {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[FuzzyNumber] {
        assert!(i < self.rows, "row out of bounds");
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> FuzzyVector {
        assert!(j < self.cols, "column out of bounds");
        FuzzyVector((0..self.rows).map(|i| self.get(i, j)).collect())
    }

    /// The real matrix of the `c`-th coordinate of every entry.
    pub fn coordinate_matrix(&self, c: usize) -> RealMatrix {
        assert!(c < 5, "coordinate index out of range");
        let mut m = RealMatrix::new(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.get(i, j).coords().0[c]);
            }
        }
        m
    }

    /// Product with a fuzzy vector: entry `i` is `Σ_k ã[i][k]·x̃[k]` in the
    /// fuzzy arithmetic. Per coordinate this is the ordinary real
    /// matrix-vector product.
    pub fn mat_vec(&self, x: &FuzzyVector) -> Result<FuzzyVector> {
        if self.cols != x.len() {
            return Err(Error::DimensionMismatch {
                what: "matrix-vector inner dimension",
                expected: self.cols,
                found: x.len(),
            });
        }
        let mut out = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let mut acc = Coordinates([0.0; 5]);
            for k in 0..self.cols {
                acc = acc + self.get(i, k).coords().hadamard(x[k].coords());
            }
            out.push(FuzzyNumber::from_coords(acc));
        }
        Ok(FuzzyVector(out))
    }

    /// Matrix product in the fuzzy arithmetic.
    pub fn matmul(&self, rhs: &FuzzyMatrix) -> Result<FuzzyMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                what: "matrix product inner dimension",
                expected: self.cols,
                found: rhs.rows,
            });
        }
        let mut out = FuzzyMatrix::new(self.rows, rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = Coordinates([0.0; 5]);
                for k in 0..self.cols {
                    acc = acc + self.get(i, k).coords().hadamard(rhs.get(k, j).coords());
                }
                out.set(i, j, FuzzyNumber::from_coords(acc));
            }
        }
        Ok(out)
    }

    /// Augments the matrix with one extra column.
    pub fn hstack_vec(&self, b: &FuzzyVector) -> Result<FuzzyMatrix> {
        if self.rows != b.len() {
            return Err(Error::DimensionMismatch {
                what: "augmented column length",
                expected: self.rows,
                found: b.len(),
            });
        }
        let cols = self.cols + 1;
        let mut m = FuzzyMatrix::new(self.rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.get(i, j));
            }
            m.set(i, self.cols, b[i]);
        }
        Ok(m)
    }

    /// Entrywise comparison of all coordinates within `tolerance`.
    pub fn approx_eq(&self, rhs: &FuzzyMatrix, tolerance: f64) -> bool {
        self.rows == rhs.rows
            && self.cols == rhs.cols
            && self
                .data
                .iter()
                .zip(&rhs.data)
                .all(|(a, b)| a.approx_eq(*b, tolerance))
    }
}

mod coordinate_form {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(n: &FuzzyNumber, s: S) -> std::result::Result<S::Ok, S::Error> {
        n.coords().0.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<FuzzyNumber, D::Error> {
        let coords = <[f64; 5]>::deserialize(d)?;
        Ok(FuzzyNumber::from_coords(Coordinates(coords)))
    }
}

/// One elementary row operation. Scale factors must be units; axpy factors
/// may be any ring element. Factors serialize in coordinate form so that a
/// serialized operation sequence replays exactly.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RowOp {
    Swap {
        a: usize,
        b: usize,
    },
    Scale {
        row: usize,
        #[serde(with = "coordinate_form")]
        factor: FuzzyNumber,
    },
    Axpy {
        src: usize,
        dst: usize,
        #[serde(with = "coordinate_form")]
        factor: FuzzyNumber,
    },
}

fn check_row(index: usize, rows: usize) -> Result<()> {
    if index >= rows {
        return Err(Error::BadIndex { index, bound: rows });
    }
    Ok(())
}

fn validate_op(m: &FuzzyMatrix, op: &RowOp) -> Result<()> {
    match *op {
        RowOp::Swap { a, b } => {
            check_row(a, m.rows())?;
            check_row(b, m.rows())?;
            if a == b {
                return Err(Error::BadShape {
                    reason: format!("swap needs two distinct rows, got {a} and {b}"),
                });
            }
        }
        RowOp::Scale { row, factor } => {
            check_row(row, m.rows())?;
            if !factor.is_unit() {
                return Err(Error::NotAUnit);
            }
        }
        RowOp::Axpy { src, dst, .. } => {
            check_row(src, m.rows())?;
            check_row(dst, m.rows())?;
            if src == dst {
                return Err(Error::BadShape {
                    reason: format!("axpy needs distinct source and destination rows, got {src}"),
                });
            }
        }
    }
    Ok(())
}

fn apply_in_place(m: &mut FuzzyMatrix, op: &RowOp) {
    let cols = m.cols;
    match *op {
        RowOp::Swap { a, b } => {
            for j in 0..cols {
                m.data.swap(a * cols + j, b * cols + j);
            }
        }
        RowOp::Scale { row, factor } => {
            for j in 0..cols {
                let v = factor * m.data[row * cols + j];
                m.data[row * cols + j] = v;
            }
        }
        RowOp::Axpy { src, dst, factor } => {
            for j in 0..cols {
                let v = m.data[dst * cols + j] + factor * m.data[src * cols + j];
                m.data[dst * cols + j] = v;
            }
        }
    }
}

/// Applies one validated row operation, returning the transformed matrix.
pub fn apply_row_op(m: &FuzzyMatrix, op: &RowOp) -> Result<FuzzyMatrix> {
    validate_op(m, op)?;
    let mut out = m.clone();
    apply_in_place(&mut out, op);
    Ok(out)
}

/// Applies a sequence of validated row operations in order.
pub fn replay_ops(m: &FuzzyMatrix, ops: &[RowOp]) -> Result<FuzzyMatrix> {
    let mut out = m.clone();
    for op in ops {
        validate_op(&out, op)?;
        apply_in_place(&mut out, op);
    }
    Ok(out)
}

/// Outcome of a fuzzy elimination.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EliminationReport {
    /// The reduced matrix.
    pub result: FuzzyMatrix,
    /// Every operation applied, in order; replaying them on the input
    /// reproduces `result` exactly.
    pub ops: Vec<RowOp>,
    /// Columns where a unit pivot was found, in row order.
    pub pivot_columns: Vec<usize>,
    /// Whether the pivots landed in the leading columns, one per row, so
    /// that the result has the form `(Ĩ | B̃)`.
    pub achieved_rref: bool,
}

/// Eliminates with pivots allowed in every column and the crate default
/// unit tolerance.
pub fn gauss_eliminate(m: &FuzzyMatrix) -> EliminationReport {
    gauss_eliminate_with(m, m.cols(), crate::DEFAULT_TOLERANCE)
}

/// Gauss-Jordan elimination over the fuzzy ring: forward elimination with
/// unit pivots, then back-substitution. Only columns below `pivot_limit`
/// are eligible for pivots (so an augmented column can be excluded). In
/// each column the pivot is the candidate whose smallest absolute
/// coordinate is largest, i.e. the most robustly invertible entry; rows
/// tie toward the smaller index. A column with no unit candidate (every
/// entry has a coordinate within `eps` of zero) is skipped.
pub fn gauss_eliminate_with(m: &FuzzyMatrix, pivot_limit: usize, eps: f64) -> EliminationReport {
    let mut work = m.clone();
    let mut ops: Vec<RowOp> = Vec::new();
    let mut pivot_columns: Vec<usize> = Vec::new();
    let rows = m.rows();

    let mut record = |work: &mut FuzzyMatrix, op: RowOp| {
        apply_in_place(work, &op);
        ops.push(op);
    };

    for col in 0..pivot_limit.min(m.cols()) {
        let pivot_row = pivot_columns.len();
        if pivot_row == rows {
            break;
        }
        let mut best: Option<(usize, f64)> = None;
        for r in pivot_row..rows {
            let strength = unit_strength(work.get(r, col));
            if strength > eps && best.is_none_or(|(_, s)| strength > s) {
                best = Some((r, strength));
            }
        }
        let Some((r, _)) = best else { continue };
        if r != pivot_row {
            record(&mut work, RowOp::Swap { a: pivot_row, b: r });
        }
        let pivot = work.get(pivot_row, col);
        if pivot != FuzzyNumber::ONE {
            let factor = pivot
                .inverse_with(eps)
                .expect("pivot entries are units by construction");
            record(&mut work, RowOp::Scale { row: pivot_row, factor });
        }
        for i in pivot_row + 1..rows {
            let entry = work.get(i, col);
            if entry != FuzzyNumber::ZERO {
                record(&mut work, RowOp::Axpy { src: pivot_row, dst: i, factor: -entry });
            }
        }
        pivot_columns.push(col);
    }

    for (k, &col) in pivot_columns.iter().enumerate().rev() {
        for i in 0..k {
            let entry = work.get(i, col);
            if entry != FuzzyNumber::ZERO {
                record(&mut work, RowOp::Axpy { src: k, dst: i, factor: -entry });
            }
        }
    }

    let achieved_rref = pivot_columns.iter().copied().eq(0..rows);
    EliminationReport {
        result: work,
        ops,
        pivot_columns,
        achieved_rref,
    }
}

fn unit_strength(n: FuzzyNumber) -> f64 {
    n.coords().0.iter().fold(f64::INFINITY, |m, c| m.min(c.abs()))
}
