//! Exact-rational reference computations.
//!
//! Two determinant algorithms from unrelated families (a permutation sum and
//! fraction-free elimination) plus an exact adjugate and inverse. None of
//! them goes through the cofactor recursion of the floating-point core, so
//! agreement between all three is meaningful.

mod rational;

pub use rational::{exact_from_float, integer, lift, rational, round_to_f64, Rational};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{MatError, Result};
use crate::matrix::MatrixOf;
use crate::{Matrix, RationalMatrix};

/// Largest order accepted by [`det_leibniz`]: 8! = 40320 terms.
pub const MAX_LEIBNIZ_ORDER: usize = 8;

fn require_square(op: &'static str, m: &RationalMatrix) -> Result<usize> {
    if !m.is_square() {
        return Err(MatError::NonSquare {
            op,
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    Ok(m.rows())
}

/// Determinant as the signed sum over all permutations of one entry per
/// row and column.
pub fn det_leibniz(m: &RationalMatrix) -> Result<Rational> {
    let n = require_square("det_leibniz", m)?;
    if n > MAX_LEIBNIZ_ORDER {
        return Err(MatError::InvalidSize {
            op: "det_leibniz",
            rows: n,
            cols: n,
        });
    }

    let term = |perm: &[usize]| -> Rational {
        perm.iter()
            .enumerate()
            .fold(Rational::one(), |acc, (i, &j)| acc * &m[(i, j)])
    };

    // Heap's algorithm; every swap flips the parity.
    let mut perm: Vec<usize> = (0..n).collect();
    let mut counters = vec![0usize; n];
    let mut even = true;
    let mut sum = term(&perm);
    let mut i = 1;
    while i < n {
        if counters[i] < i {
            let k = if i % 2 == 0 { 0 } else { counters[i] };
            perm.swap(k, i);
            even = !even;
            let t = term(&perm);
            sum = if even { sum + t } else { sum - t };
            counters[i] += 1;
            i = 1;
        } else {
            counters[i] = 0;
            i += 1;
        }
    }
    Ok(sum)
}

/// Determinant by Bareiss fraction-free elimination.
///
/// Each row is first scaled to integers by the lcm of its denominators, so
/// the elimination runs over `BigInt` with exact divisions; the scales are
/// divided back out at the end.
pub fn det_bareiss(m: &RationalMatrix) -> Result<Rational> {
    let n = require_square("det_bareiss", m)?;

    let mut scale = BigInt::one();
    let mut a: Vec<Vec<BigInt>> = m
        .iter_rows()
        .map(|row| {
            let lcm = row.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
            scale *= &lcm;
            row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
        })
        .collect();

    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n.saturating_sub(1) {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return Ok(Rational::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                let (q, r) = num.div_rem(&prev);
                debug_assert!(r.is_zero(), "Bareiss division must be exact");
                a[i][j] = q;
            }
        }
        prev = a[k][k].clone();
    }

    let last = a[n - 1][n - 1].clone();
    let det = Rational::new(if negate { -last } else { last }, scale);
    Ok(det)
}

/// Exact determinant of a minor, by Leibniz where it is in range.
fn det_exact(m: &RationalMatrix) -> Result<Rational> {
    if m.rows() <= MAX_LEIBNIZ_ORDER {
        det_leibniz(m)
    } else {
        det_bareiss(m)
    }
}

/// Exact transpose of the cofactor matrix: entry `(i, j)` is
/// `(-1)^(i+j) * det(minor(j, i))`.
pub fn exact_adjugate(m: &RationalMatrix) -> Result<RationalMatrix> {
    let n = require_square("exact_adjugate", m)?;
    let mut data = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let d = det_exact(&m.minor(j, i)?)?;
            data.push(if (i + j) % 2 == 0 { d } else { -d });
        }
    }
    MatrixOf::from_vec(n, n, data)
}

/// Exact inverse `adjugate / det`; `Singular` only when the determinant is
/// exactly zero.
pub fn exact_inverse(m: &RationalMatrix) -> Result<RationalMatrix> {
    require_square("exact_inverse", m)?;
    let det = det_bareiss(m)?;
    if det.is_zero() {
        return Err(MatError::Singular {
            op: "exact_inverse",
            determinant: det.to_string(),
        });
    }
    exact_adjugate(m)?.map(|x| x / &det)
}

/// True when the shapes match and every float entry is within `tol` of the
/// exact entry rounded to the nearest `f64`.
pub fn compare(float_result: &Matrix, exact_result: &RationalMatrix, tol: f64) -> bool {
    float_result.dims() == exact_result.dims()
        && float_result
            .as_slice()
            .iter()
            .zip(exact_result.as_slice())
            .all(|(&f, e)| compare_scalar(f, e, tol))
}

pub fn compare_scalar(float_result: f64, exact_result: &Rational, tol: f64) -> bool {
    (float_result - round_to_f64(exact_result)).abs() <= tol
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(rows: &[&[i64]]) -> RationalMatrix {
        let grid: Vec<Vec<Rational>> = rows.iter().map(|r| r.iter().map(|&x| integer(x)).collect()).collect();
        RationalMatrix::from_rows(&grid).unwrap()
    }

    fn four_by_four() -> RationalMatrix {
        q(&[&[7, 2, 9, 2], &[8, 1, 5, 2], &[9, 4, 9, 3], &[5, 6, 1, 7]])
    }

    #[test]
    fn leibniz_examples() {
        assert_eq!(det_leibniz(&q(&[&[2, 5], &[4, 6]])).unwrap(), integer(-8));
        assert_eq!(det_leibniz(&four_by_four()).unwrap(), integer(322));
        for n in 1..=6 {
            assert_eq!(det_leibniz(&RationalMatrix::identity(n).unwrap()).unwrap(), integer(1));
        }
        assert!(matches!(
            det_leibniz(&RationalMatrix::identity(9).unwrap()),
            Err(MatError::InvalidSize { .. })
        ));
        assert!(matches!(
            det_leibniz(&RationalMatrix::zeros(2, 3).unwrap()),
            Err(MatError::NonSquare { .. })
        ));
    }

    #[test]
    fn leibniz_sign_of_permutations() {
        // single transposition and a 3-cycle
        assert_eq!(det_leibniz(&q(&[&[0, 1], &[1, 0]])).unwrap(), integer(-1));
        assert_eq!(det_leibniz(&q(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]])).unwrap(), integer(1));
    }

    #[test]
    fn bareiss_examples() {
        assert_eq!(det_bareiss(&q(&[&[2, 5], &[4, 6]])).unwrap(), integer(-8));
        assert_eq!(det_bareiss(&q(&[&[1, 2], &[2, 4]])).unwrap(), integer(0));
        assert_eq!(det_bareiss(&four_by_four()).unwrap(), integer(322));
        assert_eq!(det_bareiss(&q(&[&[-4]])).unwrap(), integer(-4));
        // zero leading pivot forces a row swap
        assert_eq!(det_bareiss(&q(&[&[0, 2, 1], &[3, 1, 0], &[1, 1, 1]])).unwrap(), integer(-4));
        assert_eq!(det_bareiss(&RationalMatrix::identity(12).unwrap()).unwrap(), integer(1));
    }

    #[test]
    fn bareiss_handles_fractions() {
        let m = RationalMatrix::from_rows(&[
            vec![rational(1, 2), rational(1, 3)],
            vec![rational(2, 5), rational(-3, 7)],
        ])
        .unwrap();
        let expected = rational(1, 2) * rational(-3, 7) - rational(1, 3) * rational(2, 5);
        assert_eq!(det_bareiss(&m).unwrap(), expected);
        assert_eq!(det_leibniz(&m).unwrap(), expected);
    }

    #[test]
    fn adjugate_examples() {
        assert_eq!(exact_adjugate(&q(&[&[2, 5], &[4, 6]])).unwrap(), q(&[&[6, -5], &[-4, 2]]));
        let i3 = RationalMatrix::identity(3).unwrap();
        assert_eq!(exact_adjugate(&i3).unwrap(), i3);
        let adj = exact_adjugate(&four_by_four()).unwrap();
        assert_eq!(adj[(0, 0)], integer(-90));
    }

    #[test]
    fn inverse_and_compare() {
        let a = Matrix::from_rows(&[[2.0, 5.0], [4.0, 6.0]]).unwrap();
        let exact = exact_inverse(&lift(&a)).unwrap();
        assert_eq!(exact, RationalMatrix::from_rows(&[
            vec![rational(-3, 4), rational(5, 8)],
            vec![rational(1, 2), rational(-1, 4)],
        ]).unwrap());
        assert!(compare(&a.inverse().unwrap(), &exact, 1e-12));
        assert!(compare(&a, &lift(&a), 0.0));
        let z = Matrix::zeros(2, 2).unwrap();
        assert!(!compare(&z, &RationalMatrix::zeros(2, 3).unwrap(), 1.0));
        assert!(!compare(&z, &lift(&a), 1.0));
        assert!(matches!(exact_inverse(&q(&[&[1, 2], &[2, 4]])), Err(MatError::Singular { .. })));
    }
}
