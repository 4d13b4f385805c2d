//! Real matrices and the row-reduction machinery shared by the solvers.
//!
//! Reduction uses Gauss-Jordan elimination with partial pivoting. An entry
//! counts as zero when its magnitude is at most `tolerance` times the
//! largest magnitude of the input matrix, so the threshold scales with the
//! data.

use crate::error::{Error, Result};

use serde::{Deserialize, Serialize};

/// Dense row-major matrix of `f64`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<f64>>", into = "Vec<Vec<f64>>")]
pub struct RealMatrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl TryFrom<Vec<Vec<f64>>> for RealMatrix {
    type Error = Error;

    fn try_from(rows: Vec<Vec<f64>>) -> Result<Self> {
        RealMatrix::from_rows(&rows)
    }
}

impl From<RealMatrix> for Vec<Vec<f64>> {
    fn from(m: RealMatrix) -> Self {
        (0..m.rows).map(|i| m.row(i).to_vec()).collect()
    }
}

impl RealMatrix {
    /// Zero matrix of the given shape. Either dimension may be zero.
    pub fn new(rows: usize, cols: usize) -> Self {
        RealMatrix {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    /// Builds a matrix from rows, requiring a rectangular, finite input.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != c {
                return Err(Error::BadShape {
                    reason: format!(
                        "row {i} has {} entries, expected {c}",
                        row.len()
                    ),
                });
            }
            for &v in row {
                if !v.is_finite() {
                    return Err(Error::NonFinite {
                        what: "matrix entry",
                    });
                }
                data.push(v);
            }
        }
        Ok(RealMatrix { rows: r, cols: c, data })
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RealMatrix::new(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1.0;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[f64] {
        assert!(i < self.rows, "row out of bounds");
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// Matrix product `self · rhs`.
    pub fn mul(&self, rhs: &RealMatrix) -> Result<RealMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                what: "matrix product inner dimension",
                expected: self.cols,
                found: rhs.rows,
            });
        }
        let mut out = RealMatrix::new(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0.0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    out.data[i * rhs.cols + j] += a * rhs.get(k, j);
                }
            }
        }
        Ok(out)
    }

    /// Entrywise difference `self − rhs`.
    pub fn sub(&self, rhs: &RealMatrix) -> Result<RealMatrix> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::DimensionMismatch {
                what: "matrix difference shape",
                expected: self.rows * self.cols,
                found: rhs.rows * rhs.cols,
            });
        }
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&rhs.data) {
            *a -= b;
        }
        Ok(out)
    }

    /// Horizontal concatenation `[self | rhs]`.
    pub fn hstack(&self, rhs: &RealMatrix) -> Result<RealMatrix> {
        if self.rows != rhs.rows {
            return Err(Error::DimensionMismatch {
                what: "hstack row count",
                expected: self.rows,
                found: rhs.rows,
            });
        }
        let cols = self.cols + rhs.cols;
        let mut out = RealMatrix::new(self.rows, cols);
        for i in 0..self.rows {
            out.data[i * cols..i * cols + self.cols].copy_from_slice(self.row(i));
            out.data[i * cols + self.cols..(i + 1) * cols].copy_from_slice(rhs.row(i));
        }
        Ok(out)
    }

    /// Largest entry magnitude, 0 for an empty matrix.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, v| m.max(v.abs()))
    }
}

/// One elementary row operation, recorded in the order applied.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RealRowOp {
    Swap { a: usize, b: usize },
    Scale { row: usize, factor: f64 },
    Axpy { src: usize, dst: usize, factor: f64 },
}

/// Outcome of a row reduction.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RrefReport {
    /// The reduced matrix.
    pub rref: RealMatrix,
    /// Number of pivots found.
    pub rank: usize,
    /// Column index of each pivot, in row order.
    pub pivot_columns: Vec<usize>,
    /// Elementary operations applied, in order.
    pub row_ops: Vec<RealRowOp>,
}

/// Row-reduces with the crate default tolerance.
pub fn rref(matrix: &RealMatrix) -> RrefReport {
    rref_with(matrix, crate::DEFAULT_TOLERANCE)
}

/// Row-reduces to reduced row echelon form. Entries whose magnitude falls
/// at or below `tolerance · max_abs(input)` are treated as zero.
pub fn rref_with(matrix: &RealMatrix, tolerance: f64) -> RrefReport {
    let mut m = matrix.clone();
    let threshold = tolerance * matrix.max_abs();
    let mut ops = Vec::new();
    let mut pivot_columns = Vec::new();
    let mut pivot_row = 0;

    for col in 0..m.cols {
        if pivot_row == m.rows {
            break;
        }
        let best = (pivot_row..m.rows)
            .max_by(|&a, &b| m.get(a, col).abs().total_cmp(&m.get(b, col).abs()))
            .unwrap();
        if m.get(best, col).abs() <= threshold {
            for i in pivot_row..m.rows {
                m.set(i, col, 0.0);
            }
            continue;
        }
        if best != pivot_row {
            for j in 0..m.cols {
                let tmp = m.get(pivot_row, j);
                m.set(pivot_row, j, m.get(best, j));
                m.set(best, j, tmp);
            }
            ops.push(RealRowOp::Swap { a: pivot_row, b: best });
        }
        let pivot = m.get(pivot_row, col);
        if pivot != 1.0 {
            let factor = 1.0 / pivot;
            for j in 0..m.cols {
                let v = m.get(pivot_row, j) * factor;
                m.set(pivot_row, j, v);
            }
            m.set(pivot_row, col, 1.0);
            ops.push(RealRowOp::Scale { row: pivot_row, factor });
        }
        for i in 0..m.rows {
            if i == pivot_row {
                continue;
            }
            let factor = -m.get(i, col);
            if factor == 0.0 {
                continue;
            }
            for j in 0..m.cols {
                let v = m.get(i, j) + factor * m.get(pivot_row, j);
                m.set(i, j, v);
            }
            m.set(i, col, 0.0);
            ops.push(RealRowOp::Axpy { src: pivot_row, dst: i, factor });
        }
        pivot_columns.push(col);
        pivot_row += 1;
    }

    RrefReport {
        rank: pivot_columns.len(),
        rref: m,
        pivot_columns,
        row_ops: ops,
    }
}

/// Determinant with the crate default tolerance.
pub fn det(matrix: &RealMatrix) -> Result<f64> {
    det_with(matrix, crate::DEFAULT_TOLERANCE)
}

/// Determinant by LU factorization with partial pivoting. A pivot whose
/// magnitude falls at or below `tolerance · max_abs(input)` makes the
/// result exactly zero.
pub fn det_with(matrix: &RealMatrix, tolerance: f64) -> Result<f64> {
    if matrix.rows != matrix.cols {
        return Err(Error::BadShape {
            reason: format!(
                "determinant needs a square matrix, got {}x{}",
                matrix.rows, matrix.cols
            ),
        });
    }
    let n = matrix.rows;
    if n == 0 {
        return Ok(1.0);
    }
    let mut m = matrix.clone();
    let threshold = tolerance * matrix.max_abs();
    let mut det = 1.0;
    for col in 0..n {
        let best = (col..n)
            .max_by(|&a, &b| m.get(a, col).abs().total_cmp(&m.get(b, col).abs()))
            .unwrap();
        let pivot = m.get(best, col);
        if pivot.abs() <= threshold {
            return Ok(0.0);
        }
        if best != col {
            for j in 0..n {
                let tmp = m.get(col, j);
                m.set(col, j, m.get(best, j));
                m.set(best, j, tmp);
            }
            det = -det;
        }
        det *= pivot;
        for i in col + 1..n {
            let factor = m.get(i, col) / pivot;
            if factor == 0.0 {
                continue;
            }
            for j in col + 1..n {
                let v = m.get(i, j) - factor * m.get(col, j);
                m.set(i, j, v);
            }
            m.set(i, col, 0.0);
        }
    }
    Ok(det)
}

/// Real nullspace vectors read off a reduced matrix: one per free column,
/// with a 1 in the free column and the negated reduced-column entries in
/// the pivot positions. `cols` restricts attention to the leading columns
/// of a wider augmented matrix.
pub(crate) fn nullspace_from_rref(
    rref: &RealMatrix,
    pivot_columns: &[usize],
    cols: usize,
) -> Vec<Vec<f64>> {
    let mut vectors = Vec::new();
    for free in 0..cols {
        if pivot_columns.contains(&free) {
            continue;
        }
        let mut v = vec![0.0; cols];
        v[free] = 1.0;
        for (k, &p) in pivot_columns.iter().enumerate() {
            v[p] = -rref.get(k, free);
        }
        vectors.push(v);
    }
    vectors
}
