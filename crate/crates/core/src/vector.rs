//! Vectors of fuzzy numbers and their interaction with real matrices.

use crate::error::{Error, Result};
use crate::matrix::RealMatrix;
use crate::number::{Coordinates, FuzzyNumber};

use serde::{Deserialize, Serialize};

/// A column vector of fuzzy numbers.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FuzzyVector(pub Vec<FuzzyNumber>);

impl FuzzyVector {
    /// Vector of `n` fuzzy zeros.
    pub fn zeros(n: usize) -> Self {
        FuzzyVector(vec![FuzzyNumber::ZERO; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> FuzzyNumber {
        self.0[i]
    }

    pub fn iter(&self) -> std::slice::Iter<'_, FuzzyNumber> {
        self.0.iter()
    }

    /// The `c`-th coordinate of every entry, as a real column.
    pub fn coordinate_column(&self, c: usize) -> Vec<f64> {
        assert!(c < 5, "coordinate index out of range");
        self.0.iter().map(|n| n.coords().0[c]).collect()
    }

    /// The coordinates of every entry as an `n × 5` real block, one row
    /// per entry.
    pub fn coordinate_block(&self) -> RealMatrix {
        let mut m = RealMatrix::new(self.len(), 5);
        for (i, n) in self.0.iter().enumerate() {
            for c in 0..5 {
                m.set(i, c, n.coords().0[c]);
            }
        }
        m
    }

    /// Entrywise difference.
    pub fn sub(&self, rhs: &FuzzyVector) -> Result<FuzzyVector> {
        if self.len() != rhs.len() {
            return Err(Error::DimensionMismatch {
                what: "vector length",
                expected: self.len(),
                found: rhs.len(),
            });
        }
        Ok(FuzzyVector(
            self.0.iter().zip(&rhs.0).map(|(a, b)| *a - *b).collect(),
        ))
    }

    /// Entrywise scalar multiple.
    pub fn scale(&self, factor: f64) -> FuzzyVector {
        FuzzyVector(self.0.iter().map(|n| n.scale(factor)).collect())
    }

    /// Entrywise comparison of all coordinates within `tolerance`.
    pub fn approx_eq(&self, rhs: &FuzzyVector, tolerance: f64) -> bool {
        self.len() == rhs.len()
            && self
                .0
                .iter()
                .zip(&rhs.0)
                .all(|(a, b)| a.approx_eq(*b, tolerance))
    }

    /// Largest coordinate magnitude over all entries.
    pub fn max_abs_coord(&self) -> f64 {
        self.0
            .iter()
            .fold(0.0, |m, n| m.max(n.coords().max_abs()))
    }
}

impl From<Vec<FuzzyNumber>> for FuzzyVector {
    fn from(v: Vec<FuzzyNumber>) -> Self {
        FuzzyVector(v)
    }
}

impl std::ops::Index<usize> for FuzzyVector {
    type Output = FuzzyNumber;

    fn index(&self, i: usize) -> &FuzzyNumber {
        &self.0[i]
    }
}

/// Applies a real matrix to a fuzzy vector: entry `i` of the result is
/// `Σ_j a[i][j] · v[j]`, with the scalar multiples and sums taken in the
/// fuzzy arithmetic.
pub fn mat_vec_apply(a: &RealMatrix, v: &FuzzyVector) -> Result<FuzzyVector> {
    if a.cols() != v.len() {
        return Err(Error::DimensionMismatch {
            what: "matrix-vector inner dimension",
            expected: a.cols(),
            found: v.len(),
        });
    }
    let mut out = Vec::with_capacity(a.rows());
    for i in 0..a.rows() {
        let mut acc = Coordinates([0.0; 5]);
        for j in 0..a.cols() {
            acc = acc + v[j].coords().scale(a.get(i, j));
        }
        out.push(FuzzyNumber::from_coords(acc));
    }
    Ok(FuzzyVector(out))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn num(x: f64, dm: f64, dp: f64, mm: f64, mp: f64) -> FuzzyNumber {
        FuzzyNumber::new(x, dm, dp, mm, mp).unwrap()
    }

    #[test]
    fn coordinate_views_agree() {
        let v = FuzzyVector(vec![num(1.0, 2.0, 3.0, 0.5, -0.5), FuzzyNumber::ONE]);
        let block = v.coordinate_block();
        for c in 0..5 {
            let col = v.coordinate_column(c);
            for (i, value) in col.iter().enumerate() {
                assert_eq!(block.get(i, c), *value);
            }
        }
        assert_eq!(v.coordinate_column(0), vec![1.0, 1.0]);
        assert_eq!(v.coordinate_column(3), vec![0.5, 1.0]);
    }

    #[test]
    fn matrix_application_matches_hand_expansion() {
        // (1)·⟨1;2,3,1,1⟩ + (2)·⟨1;2,3,0,0⟩ has coordinates summed per slot
        let a = RealMatrix::from_rows(&[vec![1.0, 2.0]]).unwrap();
        let v = FuzzyVector(vec![
            num(1.0, 2.0, 3.0, 1.0, 1.0),
            num(1.0, std::f64::consts::E, std::f64::consts::E, 0.0, 0.0),
        ]);
        let out = mat_vec_apply(&a, &v).unwrap();
        assert_eq!(out.len(), 1);
        let w = out[0];
        assert!((w.x() - 3.0).abs() < 1e-12);
        assert!((w.d_minus() - (2.0f64.ln() + 2.0).exp()).abs() < 1e-9);
        assert!((w.mu_minus() - 1.0).abs() < 1e-12);
        assert!((w.mu_plus() - 1.0).abs() < 1e-12);

        assert!(mat_vec_apply(&a, &FuzzyVector::zeros(3)).is_err());
    }

    #[test]
    fn zero_matrix_sends_everything_to_fuzzy_zero() {
        let a = RealMatrix::new(2, 2);
        let v = FuzzyVector(vec![num(5.0, 1.0, 2.0, 3.0, 4.0), num(-1.0, 0.5, 0.5, 0.0, 0.0)]);
        let out = mat_vec_apply(&a, &v).unwrap();
        for i in 0..2 {
            assert!(out[i].approx_eq(FuzzyNumber::ZERO, 0.0));
        }
    }

    #[test]
    fn difference_and_scaling() {
        let v = FuzzyVector(vec![num(3.0, 1.0, 1.0, 2.0, 2.0)]);
        let w = FuzzyVector(vec![num(1.0, 1.0, 1.0, 1.0, 1.0)]);
        let d = v.sub(&w).unwrap();
        assert!((d[0].x() - 2.0).abs() < 1e-12);
        assert!((d[0].mu_minus() - 1.0).abs() < 1e-12);
        assert!(v.sub(&FuzzyVector::zeros(2)).is_err());

        let s = v.scale(2.0);
        assert!((s[0].x() - 6.0).abs() < 1e-12);
        assert!((s[0].mu_minus() - 4.0).abs() < 1e-12);
    }

    #[test]
    fn serde_is_transparent() {
        let v = FuzzyVector(vec![FuzzyNumber::ZERO, FuzzyNumber::ONE]);
        let json = serde_json::to_string(&v).unwrap();
        assert!(json.starts_with("[["));
        let back: FuzzyVector = serde_json::from_str(&json).unwrap();
        assert!(back.approx_eq(&v, 0.0));
    }
}
