use thiserror::Error;

/// Which operand axis disagreed in a binary operation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    Rows,
    Cols,
    /// Columns of the left operand against rows of the right one.
    Inner,
}

impl std::fmt::Display for Axis {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Axis::Rows => "row",
            Axis::Cols => "column",
            Axis::Inner => "inner",
        })
    }
}

/// Algebraic or structural failure of a matrix operation.
///
/// Every variant names the operation that failed and the values needed to
/// reproduce the call.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatError {
    #[error("{op}: invalid size {rows}x{cols}")]
    InvalidSize {
        op: &'static str,
        rows: usize,
        cols: usize,
    },

    /// Supplied data does not have the declared shape.
    #[error("{op}: data is {got_rows}x{got_cols}, expected {rows}x{cols}")]
    SizeMismatch {
        op: &'static str,
        rows: usize,
        cols: usize,
        got_rows: usize,
        got_cols: usize,
    },

    #[error("{op}: {axis} size mismatch between {left:?} and {right:?}")]
    DimensionMismatch {
        op: &'static str,
        axis: Axis,
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("{op}: matrix is not square ({rows}x{cols})")]
    NonSquare {
        op: &'static str,
        rows: usize,
        cols: usize,
    },

    #[error("{op}: index ({row}, {col}) out of bounds for {rows}x{cols}")]
    IndexOutOfBounds {
        op: &'static str,
        row: i64,
        col: i64,
        rows: usize,
        cols: usize,
    },

    /// The determinant's magnitude is below [`SINGULAR_THRESHOLD`](crate::SINGULAR_THRESHOLD).
    #[error("determinant below threshold")]
    Singular {
        op: &'static str,
        determinant: String,
    },

    #[error("{op}: unsupported exponent {exponent}")]
    UnsupportedExponent { op: &'static str, exponent: i64 },

    /// A result element overflowed or an input was NaN/infinite.
    #[error("{op}: non-finite value at ({row}, {col})")]
    NonFinite {
        op: &'static str,
        row: usize,
        col: usize,
    },
}

impl MatError {
    /// Short name of the error kind, used as the CLI diagnostic prefix.
    pub fn kind(&self) -> &'static str {
        match self {
            MatError::InvalidSize { .. } => "InvalidSize",
            MatError::SizeMismatch { .. } => "SizeMismatch",
            MatError::DimensionMismatch { .. } => "DimensionMismatch",
            MatError::NonSquare { .. } => "NonSquare",
            MatError::IndexOutOfBounds { .. } => "IndexOutOfBounds",
            MatError::Singular { .. } => "Singular",
            MatError::UnsupportedExponent { .. } => "UnsupportedExponent",
            MatError::NonFinite { .. } => "NonFinite",
        }
    }
}

pub type Result<T, E = MatError> = std::result::Result<T, E>;
