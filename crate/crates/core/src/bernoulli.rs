//! Bernoulli numbers in the `z / (e^z - 1)` convention (`B_1 = -1/2`).
//!
//! [`bernoulli_table`] reads them off the generating function by exact series
//! inversion. [`bernoulli_oracle`] is an unrelated closed double sum used to
//! cross-check the table.

use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::arith::{binom, factorial, Integer, Rational, SeriesQ};

/// `B_0 ..= B_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BernoulliTable {
    values: Vec<Rational>,
}

impl BernoulliTable {
    pub fn max_index(&self) -> usize {
        self.values.len() - 1
    }

    /// `B_n`. Panics if `n > max_index()`.
    pub fn get(&self, n: usize) -> &Rational {
        &self.values[n]
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }
}

/// `(e^z - 1) / z = sum_k z^k / (k+1)!` truncated at `order`.
fn exp_minus_one_over_z(order: usize) -> SeriesQ {
    SeriesQ::from_coeffs(
        order,
        (0..=order).map(|k| Rational::new(Integer::one(), factorial(k + 1))),
    )
}

/// `z / (e^z - 1)` truncated at `order`.
pub fn bernoulli_generating_function(order: usize) -> SeriesQ {
    exp_minus_one_over_z(order)
        .inv()
        .expect("constant term of (e^z - 1)/z is 1")
}

pub fn bernoulli_table(max: usize) -> BernoulliTable {
    let gf = bernoulli_generating_function(max);
    let mut k_fact = Integer::one();
    let values = gf
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| {
            if k > 0 {
                k_fact *= k;
            }
            c * &k_fact
        })
        .collect();
    BernoulliTable { values }
}

/// `B_n = sum_{k=0}^{n} 1/(k+1) sum_{j=0}^{k} (-1)^j C(k, j) j^n`, with `0^0 = 1`.
pub fn bernoulli_oracle(n: usize) -> Rational {
    let mut total = Rational::zero();
    for k in 0..=n {
        let mut inner = Integer::zero();
        for j in 0..=k {
            let power = num_traits::pow(Integer::from(j), n);
            let term = binom(&Integer::from(k), j) * power;
            if j % 2 == 0 {
                inner += term;
            } else {
                inner -= term;
            }
        }
        total += Rational::new(inner, Integer::from(k + 1));
    }
    total
}
