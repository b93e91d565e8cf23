//! Exact scalars, dense polynomials and truncated power series.
//!
//! [`Integer`] and [`Rational`] are the `num` big-number types. Rationals are
//! normalized on construction (positive denominator, coprime parts), so `==`
//! is structural equality.

mod poly;
mod series;

pub use poly::{Coefficient, Poly, PolyQ, PolyZ};
pub use series::SeriesQ;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary precision signed integer.
pub type Integer = BigInt;

/// Normalized fraction of two [`Integer`]s.
pub type Rational = BigRational;

/// Builds the normalized rational `num / den`.
///
/// The sign is carried by the numerator and zero is always `0/1`.
pub fn rat_normalize(num: Integer, den: Integer) -> Result<Rational> {
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(Rational::new(num, den))
}

/// Shorthand for a small rational constant. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(Integer::from(num), Integer::from(den))
}

/// Lifts an integer into the rationals.
pub fn rat_from_int(value: Integer) -> Rational {
    Rational::from_integer(value)
}

/// Generalized binomial coefficient `a (a-1) ... (a-b+1) / b!`.
///
/// `a` may be negative or smaller than `b`; e.g. `binom(-1, 3) == -1` and
/// `binom(2, 3) == 0`.
pub fn binom(a: &Integer, b: usize) -> Integer {
    // Running products c_i = a(a-1)...(a-i+1)/i! are integers, so each
    // division below is exact.
    let mut acc = Integer::one();
    let mut term = a.clone();
    for i in 1..=b {
        acc *= &term;
        acc /= Integer::from(i);
        if acc.is_zero() {
            break;
        }
        term -= 1;
    }
    acc
}

/// `n!`.
pub fn factorial(n: usize) -> Integer {
    (2..=n).fold(Integer::one(), |acc, i| acc * Integer::from(i))
}
