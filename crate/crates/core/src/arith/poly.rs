use alloc::vec;
use alloc::vec::Vec;
use alloc::string::ToString;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use super::{Integer, Rational};
use crate::error::{Error, Result};

/// Ring operations a polynomial coefficient must support.
pub trait Coefficient:
    Clone
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
}

impl<T> Coefficient for T where
    T: Clone
        + PartialEq
        + Zero
        + One
        + Neg<Output = T>
        + for<'a> Add<&'a T, Output = T>
        + for<'a> Sub<&'a T, Output = T>
        + for<'a> Mul<&'a T, Output = T>
{
}

/// Dense univariate polynomial; `coeffs[i]` is the coefficient of `x^i`.
///
/// The coefficient vector never has a trailing zero, so the zero polynomial
/// is the empty vector and `degree = len - 1` otherwise.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

pub type PolyQ = Poly<Rational>;
pub type PolyZ = Poly<Integer>;

impl<T: Coefficient> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(c: T, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn x() -> Self {
        Self::monomial(T::one(), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Ascending coefficients, without trailing zeros.
    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    /// Horner evaluation.
    pub fn eval(&self, at: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * at + c)
    }

    pub fn scale(&self, by: &T) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.clone() * by).collect())
    }

    /// Applies `f` to every coefficient.
    pub fn map<U: Coefficient>(&self, f: impl FnMut(&T) -> U) -> Poly<U> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }
}

impl<T: Coefficient> Zero for Poly<T> {
    fn zero() -> Self {
        Poly::zero()
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<T: Coefficient> Add for &Poly<T> {
    type Output = Poly<T>;

    fn add(self, rhs: &Poly<T>) -> Poly<T> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..len).map(|i| self.coeff(i) + &rhs.coeff(i)).collect())
    }
}

impl<T: Coefficient> Add for Poly<T> {
    type Output = Poly<T>;

    fn add(self, rhs: Poly<T>) -> Poly<T> {
        &self + &rhs
    }
}

impl<T: Coefficient> Sub for &Poly<T> {
    type Output = Poly<T>;

    fn sub(self, rhs: &Poly<T>) -> Poly<T> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..len).map(|i| self.coeff(i) - &rhs.coeff(i)).collect())
    }
}

impl<T: Coefficient> Neg for &Poly<T> {
    type Output = Poly<T>;

    fn neg(self) -> Poly<T> {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl<T: Coefficient> Mul for &Poly<T> {
    type Output = Poly<T>;

    fn mul(self, rhs: &Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let t = a.clone() * b;
                out[i + j] = core::mem::replace(&mut out[i + j], T::zero()) + &t;
            }
        }
        Poly::new(out)
    }
}

impl<T: Coefficient> Mul for Poly<T> {
    type Output = Poly<T>;

    fn mul(self, rhs: Poly<T>) -> Poly<T> {
        &self * &rhs
    }
}

/// Descending rendering, `15x^3 - 30x^2 + 5x + 2`. Non-integral rational
/// coefficients are parenthesized: `(1/4)x^2 - (1/12)x`.
impl<T: Coefficient + Signed + fmt::Display> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            let text = mag.to_string();
            if i == 0 {
                f.write_str(&text)?;
                continue;
            }
            if !mag.is_one() {
                if text.contains('/') {
                    write!(f, "({text})")?;
                } else {
                    f.write_str(&text)?;
                }
            }
            f.write_str("x")?;
            if i > 1 {
                write!(f, "^{i}")?;
            }
        }
        Ok(())
    }
}

impl PolyZ {
    /// Positive gcd of the coefficients.
    pub fn content(&self) -> Result<Integer> {
        if self.is_zero() {
            return Err(Error::ContentOfZero);
        }
        let mut g = Integer::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        Ok(g)
    }

    pub fn is_primitive(&self) -> bool {
        self.content().is_ok_and(|c| c.is_one())
    }

    /// Returns `q` with `q * den == self`, or [`Error::NotDivisible`] when no
    /// such integer polynomial exists.
    pub fn exact_div(&self, den: &PolyZ) -> Result<PolyZ> {
        let Some(den_deg) = den.degree() else {
            return Err(Error::DivisionByZero);
        };
        let Some(num_deg) = self.degree() else {
            return Ok(PolyZ::zero());
        };
        if num_deg < den_deg {
            return Err(Error::NotDivisible);
        }
        let lead = &den.coeffs[den_deg];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Integer::zero(); num_deg - den_deg + 1];
        for i in (0..quot.len()).rev() {
            let top = &rem[i + den_deg];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(Error::NotDivisible);
            }
            for (j, d) in den.coeffs.iter().enumerate() {
                rem[i + j] -= &q * d;
            }
            quot[i] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::NotDivisible);
        }
        Ok(PolyZ::new(quot))
    }

    pub fn to_rational(&self) -> PolyQ {
        self.map(|c| Rational::from_integer(c.clone()))
    }
}

impl PolyQ {
    /// The same polynomial over `Z` if every coefficient is an integer.
    pub fn to_integer(&self) -> Option<PolyZ> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(PolyZ::new)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use alloc::vec::Vec;
    use proptest::prelude::*;

    fn pz(cs: &[i64]) -> PolyZ {
        PolyZ::new(cs.iter().map(|&c| Integer::from(c)).collect())
    }

    fn pq(cs: &[(i64, i64)]) -> PolyQ {
        PolyQ::new(cs.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        let p = pz(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert!(pz(&[0, 0]).is_zero());
        assert_eq!(pz(&[0]).degree(), None);
    }

    #[test]
    fn eval_examples() {
        assert_eq!(pz(&[-1, 3]).eval(&Integer::from(0)), Integer::from(-1));
        assert_eq!(pq(&[(-1, 1), (3, 1)]).eval(&rat(0, 1)), rat(-1, 1));
        assert_eq!(PolyQ::zero().eval(&rat(7, 3)), rat(0, 1));
        assert_eq!(PolyZ::zero().eval(&Integer::from(5)), Integer::from(0));
        let x2 = PolyQ::monomial(rat(1, 1), 2);
        assert_eq!(x2.eval(&rat(3, 2)), rat(9, 4));
    }

    #[test]
    fn content_examples() {
        assert_eq!(pz(&[6, 0, 4]).content().unwrap(), Integer::from(2));
        assert_eq!(pz(&[-1, 3]).content().unwrap(), Integer::from(1));
        let p9 = pz(&[144, 548, 648, -17, -465, 165, -15]);
        assert_eq!(p9.content().unwrap(), Integer::from(1));
        assert_eq!(pz(&[-6, -9]).content().unwrap(), Integer::from(3));
        let err = PolyZ::zero().content().unwrap_err();
        assert_eq!(alloc::format!("{err}"), "content of zero polynomial undefined");
    }

    #[test]
    fn exact_div_examples() {
        let x = PolyZ::x();
        assert_eq!(pz(&[0, -1, 1]).exact_div(&x).unwrap(), pz(&[-1, 1]));
        assert_eq!(pz(&[0, -4, 12]).exact_div(&x).unwrap(), pz(&[-4, 12]));
        let err = pz(&[1, 0, 0, 1]).exact_div(&x).unwrap_err();
        assert_eq!(alloc::format!("{err}"), "not divisible");
        // x^2 + 1 over 2x: rational quotient exists, integer one does not
        assert_eq!(pz(&[1, 0, 1]).exact_div(&pz(&[0, 2])), Err(Error::NotDivisible));
        assert_eq!(pz(&[1]).exact_div(&pz(&[0, 1])), Err(Error::NotDivisible));
        assert_eq!(pz(&[1]).exact_div(&PolyZ::zero()), Err(Error::DivisionByZero));
        assert_eq!(PolyZ::zero().exact_div(&x).unwrap(), PolyZ::zero());
    }

    #[test]
    fn display_descending() {
        assert_eq!(alloc::format!("{}", pz(&[-1, 3])), "3x - 1");
        assert_eq!(alloc::format!("{}", pz(&[-1])), "-1");
        assert_eq!(alloc::format!("{}", pz(&[2, 7, -3])), "-3x^2 + 7x + 2");
        assert_eq!(alloc::format!("{}", pz(&[0, -1, 0, 1])), "x^3 - x");
        assert_eq!(alloc::format!("{}", PolyZ::zero()), "0");
        assert_eq!(alloc::format!("{}", pq(&[(0, 1), (-1, 12), (1, 4)])), "(1/4)x^2 - (1/12)x");
    }

    #[test]
    fn to_integer_requires_integral_coefficients() {
        assert_eq!(pq(&[(2, 1), (4, 2)]).to_integer(), Some(pz(&[2, 2])));
        assert_eq!(pq(&[(1, 2)]).to_integer(), None);
    }

    fn small_polyz() -> impl Strategy<Value = PolyZ> {
        proptest::collection::vec(-50i64..50, 0..7).prop_map(|v| pz(&v))
    }

    fn nonzero_polyz() -> impl Strategy<Value = PolyZ> {
        small_polyz().prop_filter("nonzero", |p| !p.is_zero())
    }

    proptest! {
        #[test]
        fn exact_div_inverts_mul(a in small_polyz(), b in nonzero_polyz()) {
            let prod = &a * &b;
            prop_assert_eq!(prod.exact_div(&b).unwrap(), a);
        }

        #[test]
        fn content_is_homogeneous(p in nonzero_polyz(), c in (-40i64..40).prop_filter("nonzero", |c| *c != 0)) {
            let c = Integer::from(c);
            let scaled = p.scale(&c);
            prop_assert_eq!(scaled.content().unwrap(), c.abs() * p.content().unwrap());
        }

        #[test]
        fn eval_is_a_ring_morphism(a in small_polyz(), b in small_polyz(), at in -9i64..9) {
            let at = Integer::from(at);
            prop_assert_eq!((&a * &b).eval(&at), a.eval(&at) * b.eval(&at));
            prop_assert_eq!((&a + &b).eval(&at), a.eval(&at) + b.eval(&at));
        }
    }

    #[test]
    fn map_preserves_degree_for_injective_maps() {
        let p = pz(&[1, 2, 3]);
        let q: Vec<_> = p.to_rational().coeffs().to_vec();
        assert_eq!(q, [rat(1, 1), rat(2, 1), rat(3, 1)]);
    }
}
