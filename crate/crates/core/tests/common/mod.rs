#![allow(dead_code)]

use matpak::oracle::{self, Rational};
use matpak::{Matrix, RationalMatrix};
use num_traits::Zero;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn int_matrix(rng: &mut impl Rng, rows: usize, cols: usize, lo: i32, hi: i32) -> Matrix {
    let data = (0..rows * cols).map(|_| rng.gen_range(lo..=hi) as f64).collect();
    Matrix::from_vec(rows, cols, data).unwrap()
}

pub fn exact(m: &Matrix) -> RationalMatrix {
    oracle::lift(m)
}

/// Textbook i-j-k product over the rationals, no transposition.
pub fn naive_exact_product(a: &RationalMatrix, b: &RationalMatrix) -> RationalMatrix {
    assert_eq!(a.cols(), b.rows());
    let mut data = Vec::with_capacity(a.rows() * b.cols());
    for i in 0..a.rows() {
        for j in 0..b.cols() {
            let mut s = Rational::zero();
            for k in 0..a.cols() {
                s += &a[(i, k)] * &b[(k, j)];
            }
            data.push(s);
        }
    }
    RationalMatrix::from_vec(a.rows(), b.cols(), data).unwrap()
}

/// Textbook i-j-k product in floating point.
pub fn naive_product(a: &Matrix, b: &Matrix) -> Matrix {
    let mut data = Vec::with_capacity(a.rows() * b.cols());
    for i in 0..a.rows() {
        for j in 0..b.cols() {
            let mut s = 0.0;
            for k in 0..a.cols() {
                s += a[(i, k)] * b[(k, j)];
            }
            data.push(s);
        }
    }
    Matrix::from_vec(a.rows(), b.cols(), data).unwrap()
}

pub fn scaled_identity(n: usize, s: &Rational) -> RationalMatrix {
    RationalMatrix::identity(n).unwrap().map(|x| x * s).unwrap()
}

pub fn max_norm_diff(a: &Matrix, b: &Matrix) -> f64 {
    assert_eq!(a.dims(), b.dims());
    a.as_slice()
        .iter()
        .zip(b.as_slice())
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

/// Deletes row `r` and column `c` by filtering the row grid.
pub fn delete_row_col(m: &Matrix, r: usize, c: usize) -> Vec<Vec<f64>> {
    m.to_rows()
        .into_iter()
        .enumerate()
        .filter(|&(i, _)| i != r)
        .map(|(_, row)| {
            row.into_iter()
                .enumerate()
                .filter(|&(j, _)| j != c)
                .map(|(_, x)| x)
                .collect()
        })
        .collect()
}

pub fn m(rows: &[&[f64]]) -> Matrix {
    Matrix::from_rows(rows).unwrap()
}

pub fn permutation_matrix(perm: &[usize]) -> Matrix {
    let n = perm.len();
    let mut data = vec![0.0; n * n];
    for (i, &j) in perm.iter().enumerate() {
        data[i * n + j] = 1.0;
    }
    Matrix::from_vec(n, n, data).unwrap()
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for k in 0..used.len() {
            if !used[k] {
                used[k] = true;
                prefix.push(k);
                go(prefix, used, out);
                prefix.pop();
                used[k] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}
