//! Element types a [`MatrixOf`](crate::MatrixOf) can hold.
//!
//! The floating-point core runs on `f64` (and `f32`); the oracle runs the
//! same structural code over exact rationals.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

/// Absolute determinant magnitude below which a floating-point matrix is
/// treated as singular.
pub const SINGULAR_THRESHOLD: f64 = 1e-12;

/// A field element usable as a matrix entry.
///
/// Arithmetic is taken by value; callers clone where they need to keep an
/// operand, which is free for the float types.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Send
    + Sync
{
    /// `false` for NaN and the infinities. Exact types are always finite.
    fn is_finite(&self) -> bool;

    /// Whether a determinant of this value makes the matrix non-invertible.
    fn is_negligible(&self) -> bool;
}

macro_rules! float_scalar {
    ($($t:ty)*) => ($(
        impl Scalar for $t {
            #[inline]
            fn is_finite(&self) -> bool {
                <$t>::is_finite(*self)
            }

            #[inline]
            fn is_negligible(&self) -> bool {
                (self.abs() as f64) < SINGULAR_THRESHOLD
            }
        }
    )*)
}

float_scalar!(f32 f64);

impl Scalar for BigRational {
    #[inline]
    fn is_finite(&self) -> bool {
        true
    }

    #[inline]
    fn is_negligible(&self) -> bool {
        self.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn float_threshold_is_absolute() {
        assert!(0.0f64.is_negligible());
        assert!((-9.0e-13f64).is_negligible());
        assert!(!1.0e-12f64.is_negligible());
        assert!(!(-3.0f64).is_negligible());
        assert!(1.0e-13f32.is_negligible());
    }

    #[test]
    fn finiteness() {
        assert!(Scalar::is_finite(&1.5f64));
        assert!(!Scalar::is_finite(&f64::NAN));
        assert!(!Scalar::is_finite(&f32::NEG_INFINITY));
        let r = BigRational::new(BigInt::from(1), BigInt::from(3));
        assert!(Scalar::is_finite(&r));
        assert!(!r.is_negligible());
        assert!(BigRational::zero().is_negligible());
    }
}
