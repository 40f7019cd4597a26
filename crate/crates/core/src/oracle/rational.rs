use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::float::FloatCore;
use num_traits::ToPrimitive;

use crate::matrix::MatrixOf;
use crate::scalar::Scalar;
use crate::RationalMatrix;

/// Arbitrary-precision fraction, always stored reduced with a positive
/// denominator (zero is `0/1`).
pub type Rational = BigRational;

pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn integer(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// The rational exactly equal to a finite binary float.
pub fn exact_from_float<F: FloatCore>(x: F) -> Option<Rational> {
    Rational::from_float(x)
}

/// Nearest `f64` to `r`, ties to even. Infinite when out of range.
pub fn round_to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Converts every entry to the rational it denotes exactly.
pub fn lift<F: Scalar + FloatCore>(m: &MatrixOf<F>) -> RationalMatrix {
    m.map(|&x| exact_from_float(x).expect("matrix entries are finite"))
        .expect("rationals are finite")
}
