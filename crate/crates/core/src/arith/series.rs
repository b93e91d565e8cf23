use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::{Integer, Rational};
use crate::error::{Error, Result};

/// Truncated power series `c_0 + c_1 z + ... + c_N z^N`, exact modulo `z^(N+1)`.
///
/// The coefficient vector always has length `N + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesQ {
    coeffs: Vec<Rational>,
}

impl SeriesQ {
    pub fn zero(order: usize) -> Self {
        SeriesQ {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Rational::one();
        s
    }

    /// Takes the first `order + 1` coefficients of `coeffs`, padding with zeros.
    pub fn from_coeffs(order: usize, coeffs: impl IntoIterator<Item = Rational>) -> Self {
        let mut c: Vec<Rational> = coeffs.into_iter().take(order + 1).collect();
        c.resize(order + 1, Rational::zero());
        SeriesQ { coeffs: c }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &Rational {
        &self.coeffs[i]
    }

    /// Index of the first nonzero coefficient, `None` if the series is zero
    /// to this order.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    fn check_order(&self, other: &SeriesQ) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::SeriesOrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &SeriesQ) -> Result<SeriesQ> {
        self.check_order(other)?;
        Ok(SeriesQ {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &SeriesQ) -> Result<SeriesQ> {
        self.check_order(other)?;
        Ok(SeriesQ {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn scale(&self, by: &Rational) -> SeriesQ {
        SeriesQ {
            coeffs: self.coeffs.iter().map(|c| c * by).collect(),
        }
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, other: &SeriesQ) -> Result<SeriesQ> {
        self.check_order(other)?;
        let n = self.order();
        let mut out = vec![Rational::zero(); n + 1];
        let lo_a = self.valuation().unwrap_or(n + 1);
        let lo_b = other.valuation().unwrap_or(n + 1);
        for i in lo_a..=n {
            let a = &self.coeffs[i];
            if a.is_zero() {
                continue;
            }
            for j in lo_b..=(n - i) {
                let b = &other.coeffs[j];
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Ok(SeriesQ { coeffs: out })
    }

    /// Multiplicative inverse; needs a nonzero constant term.
    pub fn inv(&self) -> Result<SeriesQ> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::InvalidSeriesConstantTerm);
        }
        let n = self.order();
        let inv0 = c0.recip();
        let mut out: Vec<Rational> = Vec::with_capacity(n + 1);
        out.push(inv0.clone());
        for k in 1..=n {
            let mut acc = Rational::zero();
            for j in 1..=k {
                let a = &self.coeffs[j];
                if !a.is_zero() {
                    acc += a * &out[k - j];
                }
            }
            out.push(-acc * &inv0);
        }
        Ok(SeriesQ { coeffs: out })
    }

    pub fn div(&self, other: &SeriesQ) -> Result<SeriesQ> {
        self.check_order(other)?;
        self.mul(&other.inv()?)
    }

    /// `log(f)` for `f` with constant term 1.
    ///
    /// Solves `f' = L' f` coefficientwise:
    /// `L_k = f_k - (1/k) * sum_{j=1}^{k-1} j L_j f_{k-j}`.
    pub fn log(&self) -> Result<SeriesQ> {
        if !self.coeffs[0].is_one() {
            return Err(Error::InvalidSeriesConstantTerm);
        }
        let n = self.order();
        let mut out = vec![Rational::zero(); n + 1];
        for k in 1..=n {
            let mut acc = Rational::zero();
            for j in 1..k {
                if out[j].is_zero() || self.coeffs[k - j].is_zero() {
                    continue;
                }
                acc += &out[j] * &self.coeffs[k - j] * Integer::from(j);
            }
            out[k] = &self.coeffs[k] - acc / Integer::from(k);
        }
        Ok(SeriesQ { coeffs: out })
    }

    /// `exp(s)` for `s` with constant term 0.
    ///
    /// From `E' = s' E`: `E_k = (1/k) * sum_{j=1}^{k} j s_j E_{k-j}`.
    pub fn exp(&self) -> Result<SeriesQ> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::InvalidSeriesConstantTerm);
        }
        let n = self.order();
        let mut out = vec![Rational::zero(); n + 1];
        out[0] = Rational::one();
        for k in 1..=n {
            let mut acc = Rational::zero();
            for j in 1..=k {
                if self.coeffs[j].is_zero() || out[k - j].is_zero() {
                    continue;
                }
                acc += &self.coeffs[j] * &out[k - j] * Integer::from(j);
            }
            out[k] = acc / Integer::from(k);
        }
        Ok(SeriesQ { coeffs: out })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{factorial, rat};
    use proptest::prelude::*;

    fn series(order: usize, cs: &[(i64, i64)]) -> SeriesQ {
        SeriesQ::from_coeffs(order, cs.iter().map(|&(n, d)| rat(n, d)))
    }

    /// `z / (e^z - 1)` computed as the inverse of `sum z^k / (k+1)!`.
    fn bernoulli_gf(order: usize) -> SeriesQ {
        let denom = SeriesQ::from_coeffs(
            order,
            (0..=order).map(|k| Rational::new(Integer::from(1), factorial(k + 1))),
        );
        denom.inv().unwrap()
    }

    #[test]
    fn log_exp_inverse_pair() {
        let s = series(8, &[(0, 1), (1, 1), (1, 1)]);
        assert_eq!(s.exp().unwrap().log().unwrap(), s);
    }

    #[test]
    fn exp_of_zero_is_one() {
        assert_eq!(SeriesQ::zero(5).exp().unwrap(), SeriesQ::one(5));
    }

    #[test]
    fn exp_of_z_is_exponential() {
        let e = series(10, &[(0, 1), (1, 1)]).exp().unwrap();
        for k in 0..=10 {
            assert_eq!(e.coeff(k), &Rational::new(Integer::from(1), factorial(k)));
        }
    }

    #[test]
    fn log_of_bernoulli_generating_function() {
        // log(1 + u), u = -z/2 + z^2/12 + O(z^3): u - u^2/2 = -z/2 - z^2/24
        let g = bernoulli_gf(2).log().unwrap();
        assert_eq!(g, series(2, &[(0, 1), (-1, 2), (-1, 24)]));
    }

    #[test]
    fn preconditions_are_enforced() {
        let bad = series(3, &[(2, 1), (1, 1)]);
        assert_eq!(bad.log(), Err(Error::InvalidSeriesConstantTerm));
        assert_eq!(bad.exp(), Err(Error::InvalidSeriesConstantTerm));
        assert_eq!(SeriesQ::zero(3).inv(), Err(Error::InvalidSeriesConstantTerm));
        assert_eq!(
            alloc::format!("{}", Error::InvalidSeriesConstantTerm),
            "invalid series constant term"
        );
        assert!(matches!(
            SeriesQ::one(2).mul(&SeriesQ::one(3)),
            Err(Error::SeriesOrderMismatch { .. })
        ));
    }

    #[test]
    fn inverse_times_self_is_one() {
        let f = series(6, &[(3, 2), (-1, 1), (0, 1), (5, 7)]);
        assert_eq!(f.mul(&f.inv().unwrap()).unwrap(), SeriesQ::one(6));
        assert_eq!(f.div(&f).unwrap(), SeriesQ::one(6));
    }

    fn unit_series() -> impl Strategy<Value = SeriesQ> {
        (0usize..=16)
            .prop_flat_map(|order| {
                (
                    Just(order),
                    proptest::collection::vec((-9i64..10, 1i64..6), order),
                )
            })
            .prop_map(|(order, tail)| {
                let mut cs = alloc::vec![rat(1, 1)];
                cs.extend(tail.into_iter().map(|(n, d)| rat(n, d)));
                SeriesQ::from_coeffs(order, cs)
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn exp_log_roundtrip(f in unit_series()) {
            prop_assert_eq!(f.log().unwrap().exp().unwrap(), f);
        }

        #[test]
        fn log_turns_products_into_sums(f in unit_series()) {
            // g = 2 - f also has constant term 1
            let g = SeriesQ::one(f.order()).scale(&rat(2, 1)).sub(&f).unwrap();
            let lhs = f.mul(&g).unwrap().log().unwrap();
            let rhs = f.log().unwrap().add(&g.log().unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
