//! Dense matrix algebra over a generic scalar.
//!
//! [`MatrixOf<T>`] holds the value type and every operation; the aliases
//! below pick the element type. [`Matrix`] (`f64`) is the working type,
//! [`RationalMatrix`] runs the same code exactly and backs the [`oracle`].
//!
//! ```
//! use matpak::{codec, ops, Matrix};
//!
//! let a = codec::parse("[[2 5]-[4 6]]").unwrap();
//! assert_eq!(a.determinant().unwrap(), -8.0);
//! let inv = a.inverse().unwrap();
//! assert_eq!(ops::mul(&a, &inv).unwrap(), Matrix::identity(2).unwrap());
//! assert_eq!(codec::serialize(&inv), "[[-0.75 0.625]-[0.5 -0.25]]");
//! ```

pub mod cli;
pub mod codec;
mod cofactor;
mod error;
mod matrix;
pub mod ops;
pub mod oracle;
mod scalar;

pub use codec::{ParseError, ParseErrorKind, Precision};
pub use cofactor::MAX_LAPLACE_ORDER;
pub use error::{Axis, MatError, Result};
pub use matrix::{IdentityVerdict, MatrixOf};
pub use oracle::Rational;
pub use scalar::{Scalar, SINGULAR_THRESHOLD};

/// Double-precision matrix.
pub type Matrix = MatrixOf<f64>;

/// Single-precision matrix.
pub type Matrix32 = MatrixOf<f32>;

/// Exact matrix over arbitrary-precision rationals.
pub type RationalMatrix = MatrixOf<Rational>;
