//! Prime valuations, the sequence `m_n` (OEIS A163176) and the normalizer
//! `d_n = (n+1) m_n` that makes `d_n B_n^(x)` a primitive integer polynomial.
//!
//! `m_n` is assembled from per-prime exponents,
//! `v_p(m_n) = sum_{k>=0} floor(n / (p^k (p-1))) - v_p((n+1)!)`,
//! so `(n+1)!` is never divided out and a negative exponent is reported as
//! [`Error::MNotInteger`] naming the offending prime.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Pow};

use crate::arith::{factorial, Integer};
use crate::error::{Error, Result};

/// Primes `<= n`, ascending (sieve of Eratosthenes).
pub fn primes_upto(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        primes.push(i as u64);
        let mut j = i * i;
        while j <= n {
            composite[j] = true;
            j += i;
        }
    }
    primes
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Legendre's formula: exponent of `p` in `n!`.
pub fn vp_factorial(n: u64, p: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let mut total = 0;
    let mut q = n / p;
    while q > 0 {
        total += q;
        q /= p;
    }
    Ok(total)
}

/// `sum_{k>=0} floor(n / (p^k (p-1)))`, stopping once `p^k (p-1) > n`.
pub fn adelberg_exponent(n: u64, p: u64) -> u64 {
    let mut total = 0;
    let mut modulus = p - 1;
    while modulus <= n {
        total += n / modulus;
        modulus = match modulus.checked_mul(p) {
            Some(next) => next,
            None => break,
        };
    }
    total
}

/// For every prime `p <= n+1`, the exponent `e_p` of `p` in the product
/// defining `m_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValuationProfile {
    pub n: u64,
    pub entries: BTreeMap<u64, u64>,
}

impl ValuationProfile {
    pub fn new(n: u64) -> Self {
        let entries = primes_upto(n + 1)
            .into_iter()
            .map(|p| (p, adelberg_exponent(n, p)))
            .collect();
        ValuationProfile { n, entries }
    }

    /// `v_p(m_n)` for each prime, possibly negative if integrality fails.
    pub fn m_valuations(&self) -> Result<Vec<(u64, i64)>> {
        self.entries
            .iter()
            .map(|(&p, &e)| {
                let fact = vp_factorial(self.n + 1, p)?;
                Ok((p, e as i64 - fact as i64))
            })
            .collect()
    }
}

/// `m_n = (1/(n+1)!) prod_{p <= n+1} p^(e_p)`.
pub fn m(n: u64) -> Result<Integer> {
    let profile = ValuationProfile::new(n);
    let mut value = Integer::one();
    for (p, v) in profile.m_valuations()? {
        if v < 0 {
            return Err(Error::MNotInteger { n, p });
        }
        value *= Integer::from(p).pow(v as u64);
    }
    Ok(value)
}

/// `d_n = (n+1) m_n`.
pub fn d(n: u64) -> Result<Integer> {
    Ok(m(n)? * Integer::from(n + 1))
}

/// `d_n` straight from its definition `(1/n!) prod_{p <= n+1} p^(r_p(p floor(n/(p-1))))`
/// with `r_p` the exponent of `p` in a factorial. Performs the big division,
/// which is what makes it an independent check on [`d`].
pub fn d_adelberg(n: u64) -> Result<Integer> {
    let mut product = Integer::one();
    for p in primes_upto(n + 1) {
        let n_p = p * (n / (p - 1));
        product *= Integer::from(p).pow(vp_factorial(n_p, p)?);
    }
    let n_fact = factorial(n as usize);
    if &product % &n_fact != Integer::from(0) {
        return Err(Error::NotDivisible);
    }
    Ok(product / n_fact)
}

/// `m_0 ..= m_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MSequence {
    values: Vec<Integer>,
}

impl MSequence {
    pub fn max_index(&self) -> usize {
        self.values.len() - 1
    }

    pub fn get(&self, n: usize) -> &Integer {
        &self.values[n]
    }

    pub fn values(&self) -> &[Integer] {
        &self.values
    }
}

pub fn m_sequence(max: u64) -> Result<MSequence> {
    let values = (0..=max).map(m).collect::<Result<Vec<_>>>()?;
    Ok(MSequence { values })
}
