use alloc::vec::Vec;
use core::ops::RangeInclusive;

use num_traits::{One, Pow, Zero};

use super::report::{Identity, Point, VerificationReport};
use super::{primitive_from_norlund, PrimitivePoly};
use crate::arith::{binom, factorial, Integer, Rational};
use crate::bernoulli::{bernoulli_oracle, bernoulli_table, BernoulliTable};
use crate::error::{Error, Result};
use crate::norlund::{liu_srivastava_poly, norlund_table, NorlundPoly};
use crate::sequences::{adelberg_exponent, d_adelberg, m_sequence, primes_upto, MSequence};
use crate::stirling::{stirling_via_norlund_poly, StirlingTable};

/// Table sizes a [`Verifier`] precomputes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifierBounds {
    /// Largest `n` for `B_n`, `B_n^(x)` and `P_n`.
    pub poly_max: usize,
    /// Largest row of the Stirling triangle.
    pub stirling_max: usize,
    /// Largest `n` for `m_n`; raised to `poly_max` if smaller.
    pub m_max: usize,
}

/// Precomputed tables plus one method per identity family.
///
/// Left sides come from the Stirling recurrence, the Bernoulli table or the
/// valuation route for `m_n`; right sides come from the Nörlund series path
/// and the `P_n` derived from it.
#[derive(Debug, Clone)]
pub struct Verifier {
    bounds: VerifierBounds,
    bernoulli: BernoulliTable,
    norlund: Vec<NorlundPoly>,
    m: MSequence,
    stirling: StirlingTable,
    primitive: Vec<PrimitivePoly>,
}

fn rat(v: Integer) -> Rational {
    Rational::from_integer(v)
}

fn int(v: impl Into<Integer>) -> Integer {
    v.into()
}

impl Verifier {
    /// Fails if any `P_n` with `2 <= n <= poly_max` cannot be constructed.
    pub fn new(bounds: VerifierBounds) -> Result<Self> {
        let bounds = VerifierBounds {
            m_max: bounds.m_max.max(bounds.poly_max),
            ..bounds
        };
        let bernoulli = bernoulli_table(bounds.poly_max);
        let norlund = norlund_table(bounds.poly_max);
        let m = m_sequence(bounds.m_max as u64)?;
        let stirling = StirlingTable::new(bounds.stirling_max);
        let primitive = norlund
            .iter()
            .skip(2)
            .map(|b| primitive_from_norlund(b, m.get(b.n)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Verifier {
            bounds,
            bernoulli,
            norlund,
            m,
            stirling,
            primitive,
        })
    }

    pub fn bounds(&self) -> VerifierBounds {
        self.bounds
    }

    pub fn bernoulli(&self) -> &BernoulliTable {
        &self.bernoulli
    }

    pub fn m_sequence(&self) -> &MSequence {
        &self.m
    }

    pub fn stirling(&self) -> &StirlingTable {
        &self.stirling
    }

    pub fn norlund(&self, n: usize) -> Result<&NorlundPoly> {
        self.norlund
            .get(n)
            .ok_or(Error::InvalidArgument("Norlund index beyond verifier bounds"))
    }

    pub fn primitive(&self, n: usize) -> Result<&PrimitivePoly> {
        if n < 2 {
            return Err(Error::InvalidArgument("P_n is defined for n >= 2"));
        }
        self.primitive
            .get(n - 2)
            .ok_or(Error::InvalidArgument("P_n index beyond verifier bounds"))
    }

    fn check_stirling(&self, n: u64) -> Result<()> {
        if n as usize > self.bounds.stirling_max {
            return Err(Error::InvalidArgument("Stirling row beyond verifier bounds"));
        }
        Ok(())
    }

    fn check_m(&self, n: u64) -> Result<()> {
        if n as usize > self.bounds.m_max {
            return Err(Error::InvalidArgument("m_n index beyond verifier bounds"));
        }
        Ok(())
    }

    /// `C(n, j+1) (n(n-1))^(j mod 2) P_j(n) / m_j`.
    fn stirling_right_side(&self, j: usize, n: u64) -> Result<Rational> {
        let p = self.primitive(j)?;
        let n_int = int(n);
        let mut value = binom(&n_int, j + 1) * p.poly.eval(&n_int);
        if j % 2 == 1 {
            value *= &n_int * (&n_int - 1u32);
        }
        Ok(Rational::new(value, p.m_n.clone()))
    }

    fn stirling_left_side(&self, n: u64, j: usize) -> Result<Rational> {
        let s = self.stirling.get(n as i64, n as i64 - j as i64)?;
        Ok(rat(s.clone()))
    }

    /// Both parity forms of the theorem for one `k`. Points with `n < 2k`
    /// (even form) or `n < 2k+1` (odd form) are outside the triangle and are
    /// skipped.
    pub fn theorem(&self, k: u64, n_range: RangeInclusive<u64>) -> Result<Vec<VerificationReport>> {
        if k == 0 {
            return Err(Error::InvalidArgument("k >= 1"));
        }
        self.check_stirling(*n_range.end())?;
        let even = 2 * k as usize;
        let odd = even + 1;
        let mut out = Vec::new();
        for n in n_range.clone().filter(|&n| n >= even as u64) {
            out.push(VerificationReport::compare(
                Identity::StirlingEven,
                Point::kn(k, n),
                &self.stirling_left_side(n, even)?,
                &self.stirling_right_side(even, n)?,
            ));
        }
        for n in n_range.filter(|&n| n >= odd as u64) {
            out.push(VerificationReport::compare(
                Identity::StirlingOdd,
                Point::kn(k, n),
                &self.stirling_left_side(n, odd)?,
                &self.stirling_right_side(odd, n)?,
            ));
        }
        Ok(out)
    }

    /// The parity-free form for a single `j >= 2`; `k` in the report is `j`.
    pub fn unified(&self, j: usize, n_range: RangeInclusive<u64>) -> Result<Vec<VerificationReport>> {
        self.check_stirling(*n_range.end())?;
        n_range
            .filter(|&n| n >= j as u64)
            .map(|n| {
                Ok(VerificationReport::compare(
                    Identity::StirlingUnified,
                    Point::kn(j as u64, n),
                    &self.stirling_left_side(n, j)?,
                    &self.stirling_right_side(j, n)?,
                ))
            })
            .collect()
    }

    pub fn constant_terms(&self, k_max: u64) -> Result<Vec<VerificationReport>> {
        let mut out = Vec::new();
        for k in 1..=k_max {
            let even = self.primitive(2 * k as usize)?;
            let odd = self.primitive(2 * k as usize + 1)?;
            let p_even = rat(even.constant_term());
            let p_odd = rat(odd.constant_term());
            // -(2k+1) B_{2k} / (2k)
            let base = -self.bernoulli.get(2 * k as usize) * int(2 * k + 1) / int(2 * k);
            let even_form = &base * self.m.get(2 * k as usize);
            let odd_form = &base * (self.m.get(2 * k as usize + 1) * int(k + 1));
            out.push(VerificationReport::compare(Identity::ConstantTermsEqual, Point::k(k), &p_even, &p_odd));
            out.push(VerificationReport::compare(Identity::ConstantTermEven, Point::k(k), &p_even, &even_form));
            out.push(VerificationReport::compare(Identity::ConstantTermOdd, Point::k(k), &p_odd, &odd_form));
        }
        Ok(out)
    }

    /// Linear coefficient for `1 <= n <= n_max`, quadratic coefficient of
    /// `B_{2n+1}^(x)` for `3 <= 2n+1 <= n_max`.
    pub fn lemma1(&self, n_max: usize) -> Result<Vec<VerificationReport>> {
        let mut out = Vec::new();
        for n in 1..=n_max {
            let lhs = self.norlund(n)?.coeff(1);
            let mut rhs = self.bernoulli.get(n) / int(n);
            if n % 2 == 0 {
                rhs = -rhs;
            }
            out.push(VerificationReport::compare(Identity::LinearCoefficient, Point::n(n as u64), &lhs, &rhs));
        }
        for n in (1..).take_while(|n| 2 * n < n_max) {
            let lhs = self.norlund(2 * n + 1)?.coeff(2);
            let rhs = self.bernoulli.get(2 * n) * Rational::new(int(2 * n + 1), int(4 * n));
            out.push(VerificationReport::compare(
                Identity::QuadraticCoefficient,
                Point::n(n as u64),
                &lhs,
                &rhs,
            ));
        }
        Ok(out)
    }

    /// Both sides of the binomial form of `P_n` at each integer point.
    pub fn binomial_form(&self, n: usize, x_points: &[i64]) -> Result<Vec<VerificationReport>> {
        let b = self.norlund(n)?;
        let p = self.primitive(n)?;
        let mut out = Vec::with_capacity(x_points.len());
        for &x in x_points {
            let xi = int(x);
            let lhs = b.eval(&rat(xi.clone())) * binom(&(&xi - 1u32), n);
            let mut right = binom(&xi, n + 1) * p.poly.eval(&xi);
            if n % 2 == 1 {
                right *= &xi * (&xi - 1u32);
            }
            let rhs = Rational::new(right, p.m_n.clone());
            out.push(VerificationReport::compare(Identity::BinomialForm, Point::nx(n as u64, x), &lhs, &rhs));
        }
        Ok(out)
    }

    /// `m_n (n+1)!` against the defining prime product, and the halving law.
    pub fn lemma3(&self, n_max: u64) -> Result<Vec<VerificationReport>> {
        self.check_m(n_max)?;
        let mut out = Vec::new();
        for n in 0..=n_max {
            let lhs = self.m.get(n as usize) * factorial(n as usize + 1);
            let rhs = primes_upto(n + 1)
                .into_iter()
                .fold(Integer::one(), |acc, p| acc * Integer::from(p).pow(adelberg_exponent(n, p)));
            out.push(VerificationReport::compare(Identity::MIntegral, Point::n(n), &lhs, &rhs));
        }
        for n in (0..).take_while(|n| 2 * n < n_max) {
            let lhs = self.m.get(2 * n as usize).clone();
            let rhs = self.m.get(2 * n as usize + 1) * int(n + 1);
            out.push(VerificationReport::compare(Identity::MHalving, Point::n(n), &lhs, &rhs));
        }
        Ok(out)
    }

    pub fn d_normalizer(&self, n_max: u64) -> Result<Vec<VerificationReport>> {
        self.check_m(n_max)?;
        (0..=n_max)
            .map(|n| {
                let lhs = d_adelberg(n)?;
                let rhs = self.m.get(n as usize) * int(n + 1);
                Ok(VerificationReport::compare(Identity::DNormalizer, Point::n(n), &lhs, &rhs))
            })
            .collect()
    }

    pub fn primitivity(&self, n_range: RangeInclusive<usize>) -> Result<Vec<VerificationReport>> {
        n_range
            .map(|n| {
                let content = self.primitive(n)?.poly.content()?;
                Ok(VerificationReport::compare(Identity::Primitivity, Point::n(n as u64), &content, &Integer::one()))
            })
            .collect()
    }

    pub fn degree_law(&self, k_max: u64) -> Result<Vec<VerificationReport>> {
        let mut out = Vec::new();
        for k in 1..=k_max {
            for (n, expected) in [(2 * k, 2 * k - 1), (2 * k + 1, 2 * k - 2)] {
                let p = self.primitive(n as usize)?;
                let degree = p.poly.degree().map_or(-1, |d| d as i64);
                out.push(VerificationReport::compare(
                    Identity::DegreeLaw,
                    Point::kn(k, n),
                    &degree,
                    &(expected as i64),
                ));
            }
        }
        Ok(out)
    }

    /// `C(n-1, j) B_j^(n)` against `s(n, n-j)` for `0 <= j <= n <= n_max`;
    /// `k` in the report is `j`.
    pub fn bridge(&self, n_max: u64) -> Result<Vec<VerificationReport>> {
        self.check_stirling(n_max)?;
        let mut out = Vec::new();
        for n in 0..=n_max {
            for j in 0..=n as usize {
                let lhs = self.stirling_left_side(n, j)?;
                let rhs = stirling_via_norlund_poly(n as usize, self.norlund(j)?)?;
                out.push(VerificationReport::compare(
                    Identity::StirlingNorlundBridge,
                    Point::kn(j as u64, n),
                    &lhs,
                    &rhs,
                ));
            }
        }
        Ok(out)
    }

    /// Odd Bernoulli numbers beyond `B_1` vanish, and the table agrees with
    /// the double-sum oracle.
    pub fn bernoulli_checks(&self, n_max: usize) -> Result<Vec<VerificationReport>> {
        if n_max > self.bounds.poly_max {
            return Err(Error::InvalidArgument("Bernoulli index beyond verifier bounds"));
        }
        let mut out = Vec::new();
        for n in (3..=n_max).step_by(2) {
            out.push(VerificationReport::compare(
                Identity::OddBernoulliVanish,
                Point::n(n as u64),
                self.bernoulli.get(n),
                &Rational::zero(),
            ));
        }
        for n in 0..=n_max {
            out.push(VerificationReport::compare(
                Identity::BernoulliOracle,
                Point::n(n as u64),
                self.bernoulli.get(n),
                &bernoulli_oracle(n),
            ));
        }
        Ok(out)
    }

    /// Every coefficient of `B_n^(x)`, `1 <= n <= n_max`, against the
    /// composition sum. Exponential in `n_max`; `k` in the report is the power of `x`.
    pub fn norlund_compositions(&self, n_max: usize) -> Result<Vec<VerificationReport>> {
        let mut out = Vec::new();
        for n in 1..=n_max {
            let ours = self.norlund(n)?;
            let oracle = liu_srivastava_poly(n);
            for k in 0..=n {
                out.push(VerificationReport::compare(
                    Identity::NorlundCompositions,
                    Point::kn(k as u64, n as u64),
                    &oracle.coeff(k),
                    &ours.coeff(k),
                ));
            }
        }
        Ok(out)
    }
}

/// Which independent oracle the suite uses for the Nörlund polynomials.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum NorlundOracle {
    /// `C(n-1, j) B_j^(n) = s(n, n-j)` against the Stirling recurrence.
    #[default]
    Stirling,
    /// Coefficientwise against the composition sum.
    LiuSrivastava,
}

/// Parameters of a full verification run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteConfig {
    /// Largest `k` in the Stirling sweep.
    pub k_max: u64,
    /// Largest row `n` in the Stirling sweep.
    pub n_max: u64,
    /// Largest `k` for constant terms and degrees; primitivity and the
    /// Bernoulli and coefficient checks cover `n <= 2 * poly_k_max + 1`.
    pub poly_k_max: u64,
    pub m_max: u64,
    pub bridge_n_max: u64,
    pub oracle: NorlundOracle,
    /// Largest `n` for the composition oracle.
    pub composition_cap: u64,
    /// Stop after the first identity family that reports a failure.
    pub fail_fast: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            k_max: 25,
            n_max: 120,
            poly_k_max: 40,
            m_max: 300,
            bridge_n_max: 60,
            oracle: NorlundOracle::Stirling,
            composition_cap: 20,
            fail_fast: false,
        }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<()> {
        if self.k_max < 1 {
            return Err(Error::InvalidArgument("k-max must be at least 1"));
        }
        if self.n_max < 2 * self.k_max {
            return Err(Error::InvalidArgument("n-max must be at least 2 * k-max"));
        }
        if self.poly_k_max < 1 {
            return Err(Error::InvalidArgument("poly-k-max must be at least 1"));
        }
        Ok(())
    }

    fn poly_top(&self) -> u64 {
        2 * self.poly_k_max.max(self.k_max) + 1
    }

    fn composition_top(&self) -> u64 {
        self.composition_cap.min(self.poly_top())
    }

    pub fn bounds(&self) -> VerifierBounds {
        let mut poly_max = self.poly_top();
        match self.oracle {
            NorlundOracle::Stirling => poly_max = poly_max.max(self.bridge_n_max),
            NorlundOracle::LiuSrivastava => poly_max = poly_max.max(self.composition_top()),
        }
        let stirling_max = match self.oracle {
            NorlundOracle::Stirling => self.n_max.max(self.bridge_n_max),
            NorlundOracle::LiuSrivastava => self.n_max,
        };
        VerifierBounds {
            poly_max: poly_max as usize,
            stirling_max: stirling_max as usize,
            m_max: self.m_max as usize,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteOutcome {
    /// Sorted by identity, then point.
    pub reports: Vec<VerificationReport>,
    /// Set when `fail_fast` cut the run short.
    pub stopped_early: bool,
}

impl SuiteOutcome {
    pub fn all_passed(&self) -> bool {
        self.reports.iter().all(VerificationReport::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &VerificationReport> {
        self.reports.iter().filter(|r| !r.passed())
    }
}

/// Runs every identity family over the grid described by `config`.
///
/// An `Err` means a construction step itself broke (e.g. `P_n` could not be
/// formed); comparisons that disagree are reported, not raised.
pub fn run_suite(config: &SuiteConfig) -> Result<SuiteOutcome> {
    config.validate()?;
    let v = Verifier::new(config.bounds())?;
    let poly_top = config.poly_top();
    let k_top = poly_top / 2;

    type Group<'a> = &'a dyn Fn(&Verifier) -> Result<Vec<VerificationReport>>;
    let bernoulli: Group = &|v| v.bernoulli_checks(poly_top as usize);
    let norlund: Group = &|v| match config.oracle {
        NorlundOracle::Stirling => v.bridge(config.bridge_n_max),
        NorlundOracle::LiuSrivastava => v.norlund_compositions(config.composition_top() as usize),
    };
    let lemma1: Group = &|v| v.lemma1(poly_top as usize);
    let lemma3: Group = &|v| v.lemma3(config.m_max);
    let d_norm: Group = &|v| v.d_normalizer(config.m_max);
    let primitivity: Group = &|v| v.primitivity(2..=poly_top as usize);
    let degrees: Group = &|v| v.degree_law(k_top);
    let binomial: Group = &|v| {
        let mut out = Vec::new();
        for n in 2..=(2 * config.k_max + 1) as usize {
            let points: Vec<i64> = (-3..=n as i64 + 5).collect();
            out.extend(v.binomial_form(n, &points)?);
        }
        Ok(out)
    };
    let theorem: Group = &|v| {
        let mut out = Vec::new();
        for k in 1..=config.k_max {
            out.extend(v.theorem(k, 0..=config.n_max)?);
        }
        Ok(out)
    };
    let unified: Group = &|v| {
        let mut out = Vec::new();
        for j in 2..=(2 * config.k_max + 1) as usize {
            out.extend(v.unified(j, 0..=config.n_max)?);
        }
        Ok(out)
    };
    let constants: Group = &|v| v.constant_terms(k_top);

    let groups = [
        bernoulli, norlund, lemma1, lemma3, d_norm, primitivity, degrees, binomial, theorem, unified,
        constants,
    ];

    let mut reports = Vec::new();
    let mut stopped_early = false;
    for (i, group) in groups.iter().enumerate() {
        let batch = group(&v)?;
        let failed = batch.iter().any(|r| !r.passed());
        reports.extend(batch);
        if failed && config.fail_fast && i + 1 < groups.len() {
            stopped_early = true;
            break;
        }
    }
    reports.sort();
    Ok(SuiteOutcome {
        reports,
        stopped_early,
    })
}

/// Both Stirling forms for one `k` over `n_range`.
pub fn verify_theorem(k: u64, n_range: RangeInclusive<u64>) -> Result<Vec<VerificationReport>> {
    let v = Verifier::new(VerifierBounds {
        poly_max: 2 * k as usize + 1,
        stirling_max: *n_range.end() as usize,
        m_max: 0,
    })?;
    v.theorem(k, n_range)
}

/// Constant-term identities for `1 <= k <= k_max`.
pub fn verify_constant_terms(k_max: u64) -> Result<Vec<VerificationReport>> {
    let v = Verifier::new(VerifierBounds {
        poly_max: 2 * k_max as usize + 1,
        stirling_max: 0,
        m_max: 0,
    })?;
    v.constant_terms(k_max)
}

/// Linear and quadratic Nörlund coefficients up to `n_max`.
pub fn verify_lemma1(n_max: usize) -> Result<Vec<VerificationReport>> {
    let v = Verifier::new(VerifierBounds {
        poly_max: n_max.max(2),
        stirling_max: 0,
        m_max: 0,
    })?;
    v.lemma1(n_max)
}

/// Binomial form of `P_n` at the given integer points.
pub fn verify_lemma2_binomial_form(n: usize, x_points: &[i64]) -> Result<Vec<VerificationReport>> {
    let v = Verifier::new(VerifierBounds {
        poly_max: n.max(2),
        stirling_max: 0,
        m_max: 0,
    })?;
    v.binomial_form(n, x_points)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::theorem::Status;
    use alloc::string::ToString;

    fn find<'a>(reports: &'a [VerificationReport], id: Identity, point: Point) -> &'a VerificationReport {
        reports
            .iter()
            .find(|r| r.identity == id && r.point == point)
            .expect("report present")
    }

    #[test]
    fn theorem_examples() {
        let r = verify_theorem(1, 0..=10).unwrap();
        let p = find(&r, Identity::StirlingEven, Point::kn(1, 4));
        assert_eq!((p.left.as_str(), p.right.as_str(), p.status), ("11", "11", Status::Pass));
        let p = find(&r, Identity::StirlingEven, Point::kn(1, 2));
        assert_eq!((p.left.as_str(), p.right.as_str()), ("0", "0"));
        let p = find(&r, Identity::StirlingOdd, Point::kn(1, 3));
        assert_eq!((p.left.as_str(), p.right.as_str()), ("0", "0"));
        // n < 2k for the even form and n < 2k+1 for the odd form are skipped
        assert!(r.iter().all(|x| x.point.n.unwrap() >= 2));
        assert!(r.iter().filter(|x| x.identity == Identity::StirlingOdd).all(|x| x.point.n.unwrap() >= 3));
        assert_eq!(r.len(), 9 + 8);
        assert!(r.iter().all(VerificationReport::passed));
    }

    #[test]
    fn constant_term_examples() {
        let r = verify_constant_terms(4).unwrap();
        assert!(r.iter().all(VerificationReport::passed));
        let spot = [(1, "-1"), (2, "2"), (3, "-16"), (4, "144")];
        for (k, value) in spot {
            let p = find(&r, Identity::ConstantTermsEqual, Point::k(k));
            assert_eq!((p.left.as_str(), p.right.as_str()), (value, value));
            let p = find(&r, Identity::ConstantTermEven, Point::k(k));
            assert_eq!(p.right, value);
        }
    }

    #[test]
    fn lemma1_examples() {
        let r = verify_lemma1(5).unwrap();
        assert!(r.iter().all(VerificationReport::passed));
        assert_eq!(find(&r, Identity::LinearCoefficient, Point::n(1)).left, "-1/2");
        assert_eq!(find(&r, Identity::LinearCoefficient, Point::n(3)).left, "0");
        assert_eq!(find(&r, Identity::QuadraticCoefficient, Point::n(2)).left, "-1/48");
        assert_eq!(r.iter().filter(|x| x.identity == Identity::QuadraticCoefficient).count(), 2);
    }

    #[test]
    fn binomial_form_examples() {
        let r = verify_lemma2_binomial_form(2, &[0, 4]).unwrap();
        assert_eq!((r[0].left.as_str(), r[0].right.as_str()), ("0", "0"));
        assert_eq!((r[1].left.as_str(), r[1].right.as_str()), ("11", "11"));
        let r = verify_lemma2_binomial_form(3, &[5]).unwrap();
        assert_eq!((r[0].left.as_str(), r[0].right.as_str()), ("-50", "-50"));
        let r = verify_lemma2_binomial_form(7, &(-5..20).collect::<Vec<_>>()).unwrap();
        assert!(r.iter().all(VerificationReport::passed));
    }

    #[test]
    fn small_suite_passes_with_both_oracles() {
        for oracle in [NorlundOracle::Stirling, NorlundOracle::LiuSrivastava] {
            let config = SuiteConfig {
                k_max: 3,
                n_max: 20,
                poly_k_max: 5,
                m_max: 40,
                bridge_n_max: 15,
                oracle,
                composition_cap: 8,
                fail_fast: false,
            };
            let out = run_suite(&config).unwrap();
            assert!(out.all_passed(), "{:?}", out.failures().next());
            assert!(!out.stopped_early);
            let mut sorted = out.reports.clone();
            sorted.sort();
            assert_eq!(sorted, out.reports);
            let has = |id| out.reports.iter().any(|r| r.identity == id);
            assert_eq!(has(Identity::StirlingNorlundBridge), oracle == NorlundOracle::Stirling);
            assert_eq!(has(Identity::NorlundCompositions), oracle == NorlundOracle::LiuSrivastava);
        }
    }

    #[test]
    fn suite_rejects_bad_grid() {
        let config = SuiteConfig { k_max: 1, n_max: 1, ..SuiteConfig::default() };
        assert!(matches!(run_suite(&config), Err(Error::InvalidArgument(_))));
        let config = SuiteConfig { k_max: 0, ..SuiteConfig::default() };
        assert!(run_suite(&config).is_err());
    }

    #[test]
    fn out_of_bounds_requests_are_errors() {
        let v = Verifier::new(VerifierBounds { poly_max: 5, stirling_max: 10, m_max: 10 }).unwrap();
        assert!(v.theorem(1, 0..=11).is_err());
        assert!(v.theorem(3, 0..=10).is_err());
        assert!(v.primitive(6).is_err());
        assert!(v.lemma3(11).is_err());
        assert_eq!(v.primitive(5).unwrap().poly.to_string().is_empty(), false);
    }
}
