//! Nörlund polynomials `B_n^(x)`, defined by
//! `(z / (e^z - 1))^x = sum_n B_n^(x) z^n / n!`.
//!
//! The primary method writes the left side as `exp(x * g(z))` with
//! `g = log(z / (e^z - 1))`, so `[x^m] B_n^(x) = n! [z^n] g^m / m!`.
//! This costs `O(n^3)` rational operations.
//!
//! [`liu_srivastava_coeff`] evaluates the same coefficients by summing over
//! every composition of `n`. It is exponential in `n` and only meant as an
//! independent oracle for small `n`.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::arith::{factorial, Integer, PolyQ, Rational, SeriesQ};
use crate::bernoulli::{bernoulli_generating_function, bernoulli_oracle};
use crate::error::{Error, Result};

/// `B_n^(x)` as a polynomial in `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NorlundPoly {
    pub n: usize,
    pub poly: PolyQ,
}

impl NorlundPoly {
    /// `B_n^(a)`.
    pub fn eval(&self, at: &Rational) -> Rational {
        self.poly.eval(at)
    }

    pub fn coeff(&self, m: usize) -> Rational {
        self.poly.coeff(m)
    }
}

/// `g^m / m!` for `m = 0..=order`, truncated at `order`.
fn scaled_log_powers(order: usize) -> Vec<SeriesQ> {
    let g = bernoulli_generating_function(order)
        .log()
        .expect("z/(e^z - 1) has constant term 1");
    let mut powers = Vec::with_capacity(order + 1);
    powers.push(SeriesQ::one(order));
    for m in 1..=order {
        let next = powers[m - 1]
            .mul(&g)
            .expect("same order")
            .scale(&Rational::new(Integer::one(), Integer::from(m)));
        powers.push(next);
    }
    powers
}

fn extract(n: usize, powers: &[SeriesQ], n_fact: &Integer) -> NorlundPoly {
    let coeffs = (0..=n).map(|m| powers[m].coeff(n) * n_fact).collect();
    NorlundPoly {
        n,
        poly: PolyQ::new(coeffs),
    }
}

/// `B_n^(x)` by the series method.
pub fn norlund_poly(n: usize) -> NorlundPoly {
    let powers = scaled_log_powers(n);
    extract(n, &powers, &factorial(n))
}

/// `B_0^(x) ..= B_max^(x)`, sharing one set of series powers.
pub fn norlund_table(max: usize) -> Vec<NorlundPoly> {
    let powers = scaled_log_powers(max);
    let mut n_fact = Integer::one();
    (0..=max)
        .map(|n| {
            if n > 0 {
                n_fact *= n;
            }
            extract(n, &powers, &n_fact)
        })
        .collect()
}

/// Weights `B_v / (v * v!)` for `v = 1..=n` (index 0 unused), with the
/// Bernoulli numbers taken from the double-sum oracle.
fn composition_weights(n: usize) -> Vec<Rational> {
    let mut w = vec![Rational::zero(); n + 1];
    for (v, slot) in w.iter_mut().enumerate().skip(1) {
        *slot = bernoulli_oracle(v) / (factorial(v) * Integer::from(v));
    }
    w
}

/// Sum over compositions `(v_1, .., v_parts)` of `remaining` of
/// `prefix * prod w[v_i]`.
fn sum_compositions(remaining: usize, parts: usize, prefix: &Rational, w: &[Rational]) -> Rational {
    if parts == 1 {
        return prefix * &w[remaining];
    }
    let mut total = Rational::zero();
    // leave at least one unit for each of the remaining parts
    for v in 1..=(remaining - (parts - 1)) {
        let next = prefix * &w[v];
        total += sum_compositions(remaining - v, parts - 1, &next, w);
    }
    total
}

fn liu_srivastava_with(n: usize, k: usize, w: &[Rational]) -> Rational {
    let sum = sum_compositions(n, k, &Rational::one(), w);
    let scale = Rational::new(factorial(n), factorial(k));
    let value = sum * scale;
    if (n - k) % 2 == 1 {
        -value
    } else {
        value
    }
}

/// `[x^k] B_n^(x) = (-1)^(n-k) n!/k! * sum B_v1..B_vk / (v1..vk * v1!..vk!)`,
/// the sum running over all compositions of `n` into `k` positive parts.
pub fn liu_srivastava_coeff(n: usize, k: usize) -> Result<Rational> {
    if k == 0 || k > n {
        return Err(Error::CoefficientIndexOutOfRange { n, k });
    }
    Ok(liu_srivastava_with(n, k, &composition_weights(n)))
}

/// All coefficients `[x^1] .. [x^n]` of `B_n^(x)` via [`liu_srivastava_coeff`],
/// assembled into a polynomial (constant term 0 for `n >= 1`, 1 for `n = 0`).
pub fn liu_srivastava_poly(n: usize) -> PolyQ {
    if n == 0 {
        return PolyQ::constant(Rational::one());
    }
    let w = composition_weights(n);
    let mut coeffs = vec![Rational::zero()];
    coeffs.extend((1..=n).map(|k| liu_srivastava_with(n, k, &w)));
    PolyQ::new(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::bernoulli::bernoulli_table;

    fn pq(cs: &[(i64, i64)]) -> PolyQ {
        PolyQ::new(cs.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    #[test]
    fn low_order_polynomials() {
        assert_eq!(norlund_poly(0).poly, pq(&[(1, 1)]));
        assert_eq!(norlund_poly(1).poly, pq(&[(0, 1), (-1, 2)]));
        assert_eq!(norlund_poly(2).poly, pq(&[(0, 1), (-1, 12), (3, 12)]));
        assert_eq!(norlund_poly(3).poly, pq(&[(0, 1), (0, 1), (1, 8), (-1, 8)]));
    }

    #[test]
    fn table_agrees_with_single_computation() {
        let table = norlund_table(12);
        for (n, entry) in table.iter().enumerate() {
            assert_eq!(entry.n, n);
            assert_eq!(entry, &norlund_poly(n));
        }
    }

    #[test]
    fn degree_and_divisibility_by_x() {
        for p in norlund_table(30) {
            assert_eq!(p.poly.degree(), Some(p.n));
            if p.n >= 1 {
                assert!(p.coeff(0).is_zero());
            }
        }
    }

    #[test]
    fn evaluation_at_one_gives_bernoulli_numbers() {
        let b = bernoulli_table(30);
        for p in norlund_table(30) {
            assert_eq!(&p.eval(&rat(1, 1)), b.get(p.n));
        }
    }

    #[test]
    fn liu_srivastava_examples() {
        let b = bernoulli_table(10);
        for n in 1..=10usize {
            let sign = if n % 2 == 1 { rat(1, 1) } else { rat(-1, 1) };
            let expected = sign * b.get(n) / Integer::from(n);
            assert_eq!(liu_srivastava_coeff(n, 1).unwrap(), expected, "n={n}");
            let top = num_traits::pow(rat(-1, 2), n);
            assert_eq!(liu_srivastava_coeff(n, n).unwrap(), top, "n={n}");
        }
        assert_eq!(liu_srivastava_coeff(5, 2).unwrap(), rat(-1, 48));
        assert_eq!(rat(5, 8) * b.get(4), rat(-1, 48));
    }

    #[test]
    fn liu_srivastava_rejects_bad_index() {
        for (n, k) in [(3, 0), (3, 4), (0, 0)] {
            let err = liu_srivastava_coeff(n, k).unwrap_err();
            assert_eq!(err, Error::CoefficientIndexOutOfRange { n, k });
            assert!(alloc::format!("{err}").starts_with("coefficient index out of range"));
        }
    }

    #[test]
    fn series_method_matches_composition_sum() {
        for p in norlund_table(12) {
            assert_eq!(p.poly, liu_srivastava_poly(p.n), "n={}", p.n);
        }
    }
}
