//! The dense matrix value type and its structural operations.
//!
//! Indices are 0-based everywhere: the entry written `a(1,1)` in 1-based
//! textbook notation is `m[(0, 0)]` here.

use std::fmt;
use std::ops::Index;

use crate::error::{MatError, Result};
use crate::scalar::Scalar;

/// Dense row-major matrix with at least one row and one column.
///
/// Values are immutable: every operation returns a new matrix. All entries
/// are finite.
#[derive(Clone, PartialEq)]
pub struct MatrixOf<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

/// Outcome of [`MatrixOf::is_identity`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdentityVerdict {
    Identity,
    NotIdentity,
    NotSquare,
}

impl IdentityVerdict {
    /// Integer code used by the CLI: 1 identity, 0 not identity, 2 not square.
    pub fn code(self) -> u8 {
        match self {
            IdentityVerdict::Identity => 1,
            IdentityVerdict::NotIdentity => 0,
            IdentityVerdict::NotSquare => 2,
        }
    }
}

fn check_size(op: &'static str, rows: usize, cols: usize) -> Result<()> {
    if rows < 1 || cols < 1 {
        return Err(MatError::InvalidSize { op, rows, cols });
    }
    Ok(())
}

impl<T: Scalar> MatrixOf<T> {
    /// Builds a matrix from row-major storage, rejecting non-finite entries.
    pub(crate) fn from_parts(op: &'static str, rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        debug_assert_eq!(data.len(), rows * cols);
        if let Some(k) = data.iter().position(|x| !x.is_finite()) {
            return Err(MatError::NonFinite {
                op,
                row: k / cols,
                col: k % cols,
            });
        }
        Ok(MatrixOf { rows, cols, data })
    }

    /// A `rows x cols` matrix of zeros.
    pub fn zeros(rows: usize, cols: usize) -> Result<Self> {
        check_size("zeros", rows, cols)?;
        Ok(MatrixOf {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        })
    }

    pub fn identity(n: usize) -> Result<Self> {
        check_size("identity", n, n)?;
        let mut data = vec![T::zero(); n * n];
        for i in 0..n {
            data[i * n + i] = T::one();
        }
        Ok(MatrixOf { rows: n, cols: n, data })
    }

    /// Copies a grid of rows into a matrix of the declared shape.
    pub fn from_data<R: AsRef<[T]>>(data: &[R], rows: usize, cols: usize) -> Result<Self> {
        check_size("from_data", rows, cols)?;
        let flat = flatten("from_data", data, rows, cols)?;
        Self::from_parts("from_data", rows, cols, flat)
    }

    /// Like [`from_data`](Self::from_data) with the shape taken from the grid.
    pub fn from_rows<R: AsRef<[T]>>(data: &[R]) -> Result<Self> {
        let rows = data.len();
        let cols = data.first().map_or(0, |r| r.as_ref().len());
        Self::from_data(data, rows, cols)
    }

    /// Wraps row-major storage of length `rows * cols`.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        check_size("from_vec", rows, cols)?;
        if data.len() != rows * cols {
            return Err(MatError::SizeMismatch {
                op: "from_vec",
                rows,
                cols,
                got_rows: data.len() / cols,
                got_cols: data.len() % cols,
            });
        }
        Self::from_parts("from_vec", rows, cols, data)
    }

    /// A new matrix with this matrix's shape holding `data`.
    pub fn fill<R: AsRef<[T]>>(&self, data: &[R]) -> Result<Self> {
        let flat = flatten("fill", data, self.rows, self.cols)?;
        Self::from_parts("fill", self.rows, self.cols, flat)
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Result<MatrixOf<U>> {
        MatrixOf::from_parts("map", self.rows, self.cols, self.data.iter().map(f).collect())
    }
}

fn flatten<T: Clone, R: AsRef<[T]>>(op: &'static str, data: &[R], rows: usize, cols: usize) -> Result<Vec<T>> {
    let mismatch = |got_rows, got_cols| MatError::SizeMismatch {
        op,
        rows,
        cols,
        got_rows,
        got_cols,
    };
    if data.len() != rows {
        let got_cols = data.first().map_or(0, |r| r.as_ref().len());
        return Err(mismatch(data.len(), got_cols));
    }
    let mut flat = Vec::with_capacity(rows * cols);
    for row in data {
        let row = row.as_ref();
        if row.len() != cols {
            return Err(mismatch(data.len(), row.len()));
        }
        flat.extend_from_slice(row);
    }
    Ok(flat)
}

impl<T> MatrixOf<T> {
    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn dims(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, row: usize, col: usize) -> Option<&T> {
        if row < self.rows && col < self.cols {
            self.data.get(row * self.cols + col)
        } else {
            None
        }
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn iter_rows(&self) -> impl Iterator<Item = &[T]> {
        self.data.chunks(self.cols)
    }

    /// Row-major view of the entries.
    pub fn as_slice(&self) -> &[T] {
        &self.data
    }

    pub fn into_vec(self) -> Vec<T> {
        self.data
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }
}

impl<T: Clone> MatrixOf<T> {
    pub fn to_rows(&self) -> Vec<Vec<T>> {
        self.iter_rows().map(<[T]>::to_vec).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self[(i, j)].clone());
            }
        }
        MatrixOf {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    /// The submatrix with row `row` and column `col` deleted.
    ///
    /// Entry `(i, j)` of the result is entry
    /// `(i + [i >= row], j + [j >= col])` of `self`.
    pub fn minor(&self, row: usize, col: usize) -> Result<Self> {
        if row >= self.rows || col >= self.cols {
            return Err(MatError::IndexOutOfBounds {
                op: "minor",
                row: row as i64,
                col: col as i64,
                rows: self.rows,
                cols: self.cols,
            });
        }
        if self.rows < 2 || self.cols < 2 {
            return Err(MatError::InvalidSize {
                op: "minor",
                rows: self.rows,
                cols: self.cols,
            });
        }
        let data = self
            .iter_rows()
            .enumerate()
            .filter(|&(i, _)| i != row)
            .flat_map(|(_, r)| {
                r.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != col)
                    .map(|(_, x)| x.clone())
            })
            .collect();
        Ok(MatrixOf {
            rows: self.rows - 1,
            cols: self.cols - 1,
            data,
        })
    }

    /// Grid `g` with `g[i][j] == self.minor(i, j)`.
    pub fn all_minors(&self) -> Result<Vec<Vec<Self>>> {
        if self.rows < 2 || self.cols < 2 {
            return Err(MatError::InvalidSize {
                op: "all_minors",
                rows: self.rows,
                cols: self.cols,
            });
        }
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.minor(i, j)).collect())
            .collect()
    }
}

impl<T: Scalar> MatrixOf<T> {
    /// Exact check against the identity: ones on the diagonal, zeros elsewhere.
    pub fn is_identity(&self) -> IdentityVerdict {
        if !self.is_square() {
            return IdentityVerdict::NotSquare;
        }
        let (one, zero) = (T::one(), T::zero());
        let exact = self.iter_rows().enumerate().all(|(i, r)| {
            r.iter()
                .enumerate()
                .all(|(j, x)| if i == j { *x == one } else { *x == zero })
        });
        if exact {
            IdentityVerdict::Identity
        } else {
            IdentityVerdict::NotIdentity
        }
    }
}

impl<T> Index<(usize, usize)> for MatrixOf<T> {
    type Output = T;

    fn index(&self, (i, j): (usize, usize)) -> &T {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds for {}x{}", self.rows, self.cols);
        &self.data[i * self.cols + j]
    }
}

/// Writes the bracket-dash form, e.g. `[[2 3 4]-[5 6 7]]`.
impl<T: fmt::Display> fmt::Display for MatrixOf<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, row) in self.iter_rows().enumerate() {
            if i > 0 {
                f.write_str("-")?;
            }
            f.write_str("[")?;
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                fmt::Display::fmt(x, f)?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

impl<T: fmt::Debug> fmt::Debug for MatrixOf<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MatrixOf({}x{}) ", self.rows, self.cols)?;
        f.debug_list().entries(self.data.chunks(self.cols)).finish()
    }
}
