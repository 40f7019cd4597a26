//! Determinant by cofactor expansion, and the cofactor, adjoint and inverse
//! matrices built on it.

use crate::error::{MatError, Result};
use crate::matrix::MatrixOf;
use crate::scalar::Scalar;

/// Largest order accepted by [`MatrixOf::determinant`]; the expansion is O(n!).
pub const MAX_LAPLACE_ORDER: usize = 10;

fn require_square<T>(op: &'static str, m: &MatrixOf<T>) -> Result<usize> {
    if !m.is_square() {
        return Err(MatError::NonSquare {
            op,
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    Ok(m.rows())
}

fn finite<T: Scalar>(op: &'static str, x: T) -> Result<T> {
    if x.is_finite() {
        Ok(x)
    } else {
        Err(MatError::NonFinite { op, row: 0, col: 0 })
    }
}

/// Determinant of the submatrix made of rows `row..` and the columns in `cols`,
/// expanded along its first row.
///
/// Dropping a column from `cols` is the same as taking the minor at
/// `(row, j)`, so this is the textbook recursion without the copies.
fn laplace<T: Scalar>(m: &MatrixOf<T>, row: usize, cols: &[usize]) -> T {
    match *cols {
        [c] => m[(row, c)].clone(),
        [c0, c1] => {
            m[(row, c0)].clone() * m[(row + 1, c1)].clone() - m[(row, c1)].clone() * m[(row + 1, c0)].clone()
        }
        _ => {
            let mut rest = Vec::with_capacity(cols.len() - 1);
            let mut acc = T::zero();
            for (j, &c) in cols.iter().enumerate() {
                rest.clear();
                rest.extend(cols.iter().copied().filter(|&k| k != c));
                let term = m[(row, c)].clone() * laplace(m, row + 1, &rest);
                acc = if j % 2 == 0 { acc + term } else { acc - term };
            }
            acc
        }
    }
}

impl<T: Scalar> MatrixOf<T> {
    /// Determinant by Laplace expansion along row 0.
    ///
    /// 1x1 and 2x2 are closed-form; larger orders recurse on minors with
    /// alternating signs. Orders above [`MAX_LAPLACE_ORDER`] are rejected.
    pub fn determinant(&self) -> Result<T> {
        let n = require_square("determinant", self)?;
        if n > MAX_LAPLACE_ORDER {
            return Err(MatError::InvalidSize {
                op: "determinant",
                rows: n,
                cols: n,
            });
        }
        let cols: Vec<usize> = (0..n).collect();
        finite("determinant", laplace(self, 0, &cols))
    }

    /// Signed minors: entry `(i, j)` is `(-1)^(i+j) * det(minor(i, j))`.
    pub fn cofactor(&self) -> Result<Self> {
        let n = require_square("cofactor", self)?;
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let d = self.minor(i, j)?.determinant()?;
                data.push(if (i + j) % 2 == 0 { d } else { -d });
            }
        }
        Self::from_parts("cofactor", n, n, data)
    }

    /// Transpose of the cofactor matrix.
    pub fn adjoint(&self) -> Result<Self> {
        require_square("adjoint", self)?;
        Ok(self.cofactor()?.transpose())
    }

    /// `adjoint / determinant`; fails with `Singular` when the determinant
    /// is negligible.
    pub fn inverse(&self) -> Result<Self> {
        require_square("inverse", self)?;
        let det = self.determinant()?;
        if det.is_negligible() {
            return Err(MatError::Singular {
                op: "inverse",
                determinant: format!("{det:?}"),
            });
        }
        let adj = self.adjoint()?;
        let (rows, cols) = adj.dims();
        let data = adj.into_vec().into_iter().map(|x| x / det.clone()).collect();
        Self::from_parts("inverse", rows, cols, data)
    }
}
