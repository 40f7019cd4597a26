//! Addition, subtraction, multiplication and integer powers.

use crate::error::{Axis, MatError, Result};
use crate::matrix::MatrixOf;
use crate::scalar::Scalar;

/// Largest exponent [`pow`] accepts. Powers are computed by repeated
/// multiplication, one product per unit of exponent.
pub const MAX_EXPONENT: i64 = 1 << 16;

fn same_dims<T>(op: &'static str, p: &MatrixOf<T>, q: &MatrixOf<T>) -> Result<()> {
    let axis = if p.rows() != q.rows() {
        Axis::Rows
    } else if p.cols() != q.cols() {
        Axis::Cols
    } else {
        return Ok(());
    };
    Err(MatError::DimensionMismatch {
        op,
        axis,
        left: p.dims(),
        right: q.dims(),
    })
}

fn zip_with<T: Scalar>(
    op: &'static str,
    p: &MatrixOf<T>,
    q: &MatrixOf<T>,
    f: impl Fn(T, T) -> T,
) -> Result<MatrixOf<T>> {
    same_dims(op, p, q)?;
    let data = p
        .as_slice()
        .iter()
        .zip(q.as_slice())
        .map(|(a, b)| f(a.clone(), b.clone()))
        .collect();
    MatrixOf::from_parts(op, p.rows(), p.cols(), data)
}

pub fn add<T: Scalar>(p: &MatrixOf<T>, q: &MatrixOf<T>) -> Result<MatrixOf<T>> {
    zip_with("add", p, q, |a, b| a + b)
}

pub fn sub<T: Scalar>(p: &MatrixOf<T>, q: &MatrixOf<T>) -> Result<MatrixOf<T>> {
    zip_with("sub", p, q, |a, b| a - b)
}

/// Matrix product `p * q`.
///
/// `p` is transposed first so that entry `(i, j)` is the dot product of
/// column `i` of `pᵀ` with column `j` of `q`, summed over ascending `k`
/// with a fresh accumulator per entry.
pub fn mul<T: Scalar>(p: &MatrixOf<T>, q: &MatrixOf<T>) -> Result<MatrixOf<T>> {
    if p.cols() != q.rows() {
        return Err(MatError::DimensionMismatch {
            op: "mul",
            axis: Axis::Inner,
            left: p.dims(),
            right: q.dims(),
        });
    }
    let pt = p.transpose();
    let (rows, cols, inner) = (p.rows(), q.cols(), q.rows());
    let mut data = Vec::with_capacity(rows * cols);
    for i in 0..rows {
        for j in 0..cols {
            let mut sum = T::zero();
            for k in 0..inner {
                sum = sum + pt[(k, i)].clone() * q[(k, j)].clone();
            }
            data.push(sum);
        }
    }
    MatrixOf::from_parts("mul", rows, cols, data)
}

/// `p` raised to `n >= 1`, as `p * pow(p, n - 1)`.
pub fn pow<T: Scalar>(p: &MatrixOf<T>, n: i64) -> Result<MatrixOf<T>> {
    if !(1..=MAX_EXPONENT).contains(&n) {
        return Err(MatError::UnsupportedExponent { op: "pow", exponent: n });
    }
    if !p.is_square() {
        return Err(MatError::NonSquare {
            op: "pow",
            rows: p.rows(),
            cols: p.cols(),
        });
    }
    let mut acc = p.clone();
    for _ in 1..n {
        acc = mul(p, &acc)?;
    }
    Ok(acc)
}
