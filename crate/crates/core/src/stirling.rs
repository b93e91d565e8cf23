//! Signed Stirling numbers of the first kind,
//! `x (x-1) ... (x-n+1) = sum_k s(n, k) x^k`.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::arith::{binom, Integer, PolyZ, Rational};
use crate::error::{Error, Result};
use crate::norlund::{norlund_poly, NorlundPoly};

/// Rows `0..=n_max` of the triangle, built with
/// `s(n, k) = s(n-1, k-1) - (n-1) s(n-1, k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StirlingTable {
    rows: Vec<Vec<Integer>>,
}

impl StirlingTable {
    pub fn new(n_max: usize) -> Self {
        let mut rows: Vec<Vec<Integer>> = Vec::with_capacity(n_max + 1);
        rows.push(vec![Integer::one()]);
        for n in 1..=n_max {
            let prev = &rows[n - 1];
            let factor = Integer::from(n - 1);
            let row = (0..=n)
                .map(|k| {
                    let diag = if k >= 1 { prev[k - 1].clone() } else { Integer::zero() };
                    match prev.get(k) {
                        Some(above) => diag - &factor * above,
                        None => diag,
                    }
                })
                .collect();
            rows.push(row);
        }
        StirlingTable { rows }
    }

    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    /// `s(n, k)`; errors outside `0 <= k <= n <= n_max`.
    pub fn get(&self, n: i64, k: i64) -> Result<&Integer> {
        let out = Error::IndexOutOfTriangle { n, k };
        if n < 0 || k < 0 || k > n {
            return Err(out);
        }
        self.rows
            .get(n as usize)
            .and_then(|row| row.get(k as usize))
            .ok_or(out)
    }

    pub fn row(&self, n: usize) -> &[Integer] {
        &self.rows[n]
    }

    /// `sum_k s(n, k) x^k`.
    pub fn row_poly(&self, n: usize) -> PolyZ {
        PolyZ::new(self.rows[n].clone())
    }
}

/// `s(n, k)`.
pub fn stirling1(n: i64, k: i64) -> Result<Integer> {
    if n < 0 || k < 0 || k > n {
        return Err(Error::IndexOutOfTriangle { n, k });
    }
    StirlingTable::new(n as usize).get(n, k).cloned()
}

/// `C(n-1, j) * B_j^(n)` for a precomputed `B_j^(x)`.
pub fn stirling_via_norlund_poly(n: usize, norlund: &NorlundPoly) -> Result<Rational> {
    if norlund.n > n {
        return Err(Error::InvalidArgument("need n >= j"));
    }
    let c = binom(&(Integer::from(n) - 1), norlund.n);
    let at = Rational::from_integer(Integer::from(n));
    Ok(norlund.eval(&at) * c)
}

/// `C(n-1, j) * B_j^(n)`, which equals `s(n, n-j)`.
pub fn stirling_via_norlund(n: usize, j: usize) -> Result<Rational> {
    if j > n {
        return Err(Error::InvalidArgument("need n >= j"));
    }
    stirling_via_norlund_poly(n, &norlund_poly(j))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::norlund::norlund_table;

    fn int(v: i64) -> Integer {
        Integer::from(v)
    }

    /// `x (x-1) ... (x-n+1)` by repeated multiplication.
    fn falling_factorial(n: usize) -> PolyZ {
        (0..n).fold(PolyZ::constant(int(1)), |acc, i| {
            &acc * &PolyZ::new(vec![int(-(i as i64)), int(1)])
        })
    }

    #[test]
    fn boundary_values() {
        let t = StirlingTable::new(20);
        assert_eq!(t.get(0, 0).unwrap(), &int(1));
        for n in 1..=20 {
            assert_eq!(t.get(n, 0).unwrap(), &int(0));
            assert_eq!(t.get(n, n).unwrap(), &int(1));
        }
    }

    #[test]
    fn small_values() {
        assert_eq!(stirling1(4, 2).unwrap(), int(11));
        assert_eq!(stirling1(5, 4).unwrap(), int(-10));
        assert_eq!(stirling1(5, 2).unwrap(), int(-50));
        for n in 2..15i64 {
            assert_eq!(stirling1(n, n - 1).unwrap(), -binom(&int(n), 2));
        }
    }

    #[test]
    fn out_of_triangle() {
        for (n, k) in [(3, 4), (-1, 0), (2, -1)] {
            let err = stirling1(n, k).unwrap_err();
            assert_eq!(err, Error::IndexOutOfTriangle { n, k });
            assert!(alloc::format!("{err}").starts_with("index out of triangle"));
        }
        assert!(StirlingTable::new(3).get(4, 1).is_err());
    }

    #[test]
    fn rows_expand_falling_factorial() {
        let t = StirlingTable::new(12);
        for n in 0..=12 {
            assert_eq!(t.row_poly(n), falling_factorial(n), "n={n}");
        }
    }

    #[test]
    fn via_norlund_examples() {
        for n in 0..8 {
            assert_eq!(stirling_via_norlund(n, 0).unwrap(), rat(1, 1));
        }
        assert_eq!(stirling_via_norlund(4, 2).unwrap(), rat(11, 1));
        assert_eq!(stirling_via_norlund(5, 1).unwrap(), rat(-10, 1));
        assert!(stirling_via_norlund(2, 3).is_err());
    }

    #[test]
    fn via_norlund_matches_table() {
        let t = StirlingTable::new(25);
        let polys = norlund_table(25);
        for n in 0..=25usize {
            for (j, p) in polys.iter().enumerate().take(n + 1) {
                let lhs = stirling_via_norlund_poly(n, p).unwrap();
                let rhs = t.get(n as i64, (n - j) as i64).unwrap();
                assert_eq!(lhs, Rational::from_integer(rhs.clone()), "n={n} j={j}");
            }
        }
    }
}
