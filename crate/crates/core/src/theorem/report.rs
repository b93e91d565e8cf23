use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

/// Named identity checked by the verifier. Declaration order is report order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Identity {
    /// `B_{2n+1} = 0` for `n >= 1`.
    OddBernoulliVanish,
    /// Series-inversion Bernoulli table against the double-sum oracle.
    BernoulliOracle,
    /// Series-method `B_n^(x)` against the composition-sum coefficients.
    NorlundCompositions,
    /// `s(n, n-j) = C(n-1, j) B_j^(n)`.
    StirlingNorlundBridge,
    /// `[x] B_n^(x) = (-1)^(n-1) B_n / n`.
    LinearCoefficient,
    /// `[x^2] B_{2n+1}^(x) = (2n+1)/(4n) B_{2n}`.
    QuadraticCoefficient,
    /// `m_n` is an integer.
    MIntegral,
    /// `m_{2n} = (n+1) m_{2n+1}`.
    MHalving,
    /// `d_n` from its factorial-quotient definition equals `(n+1) m_n`.
    DNormalizer,
    /// `content(P_n) = 1`.
    Primitivity,
    /// `deg P_{2k} = 2k-1`, `deg P_{2k+1} = 2k-2`.
    DegreeLaw,
    /// `C(x-1, n) B_n^(x) = C(x, n+1) (x(x-1))^(n mod 2) P_n(x) / m_n` at integer `x`.
    BinomialForm,
    /// `s(n, n-2k) = C(n, 2k+1) P_{2k}(n) / m_{2k}`.
    StirlingEven,
    /// `s(n, n-2k-1) = C(n, 2k+2) n(n-1) P_{2k+1}(n) / m_{2k+1}`.
    StirlingOdd,
    /// `s(n, n-j) = C(n, j+1) (n(n-1))^(j mod 2) P_j(n) / m_j`, both parities.
    StirlingUnified,
    /// `P_{2k}(0) = P_{2k+1}(0)`.
    ConstantTermsEqual,
    /// `P_{2k}(0) = -m_{2k} (2k+1) B_{2k} / (2k)`.
    ConstantTermEven,
    /// `P_{2k+1}(0) = -(k+1) m_{2k+1} (2k+1) B_{2k} / (2k)`.
    ConstantTermOdd,
}

impl Identity {
    pub const ALL: [Identity; 18] = [
        Identity::OddBernoulliVanish,
        Identity::BernoulliOracle,
        Identity::NorlundCompositions,
        Identity::StirlingNorlundBridge,
        Identity::LinearCoefficient,
        Identity::QuadraticCoefficient,
        Identity::MIntegral,
        Identity::MHalving,
        Identity::DNormalizer,
        Identity::Primitivity,
        Identity::DegreeLaw,
        Identity::BinomialForm,
        Identity::StirlingEven,
        Identity::StirlingOdd,
        Identity::StirlingUnified,
        Identity::ConstantTermsEqual,
        Identity::ConstantTermEven,
        Identity::ConstantTermOdd,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::OddBernoulliVanish => "odd-bernoulli-vanish",
            Identity::BernoulliOracle => "bernoulli-oracle",
            Identity::NorlundCompositions => "norlund-compositions",
            Identity::StirlingNorlundBridge => "stirling-norlund-bridge",
            Identity::LinearCoefficient => "linear-coefficient",
            Identity::QuadraticCoefficient => "quadratic-coefficient",
            Identity::MIntegral => "m-integral",
            Identity::MHalving => "m-halving",
            Identity::DNormalizer => "d-normalizer",
            Identity::Primitivity => "primitivity",
            Identity::DegreeLaw => "degree-law",
            Identity::BinomialForm => "binomial-form",
            Identity::StirlingEven => "stirling-even",
            Identity::StirlingOdd => "stirling-odd",
            Identity::StirlingUnified => "stirling-unified",
            Identity::ConstantTermsEqual => "constant-terms-equal",
            Identity::ConstantTermEven => "constant-term-even",
            Identity::ConstantTermOdd => "constant-term-odd",
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Parameter point of a single comparison. Unused coordinates are `None`.
///
/// `k` is the family index, `n` the row or polynomial index and `x` an
/// evaluation point.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    pub k: Option<u64>,
    pub n: Option<u64>,
    pub x: Option<i64>,
}

impl Point {
    pub fn k(k: u64) -> Self {
        Point { k: Some(k), ..Point::default() }
    }

    pub fn n(n: u64) -> Self {
        Point { n: Some(n), ..Point::default() }
    }

    pub fn kn(k: u64, n: u64) -> Self {
        Point { k: Some(k), n: Some(n), x: None }
    }

    pub fn nx(n: u64, x: i64) -> Self {
        Point { k: None, n: Some(n), x: Some(x) }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut sep = "";
        if let Some(k) = self.k {
            write!(f, "k={k}")?;
            sep = " ";
        }
        if let Some(n) = self.n {
            write!(f, "{sep}n={n}")?;
            sep = " ";
        }
        if let Some(x) = self.x {
            write!(f, "{sep}x={x}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        }
    }
}

/// Outcome of one exact comparison. `status` is `Pass` iff both sides are equal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VerificationReport {
    pub identity: Identity,
    pub point: Point,
    pub status: Status,
    pub left: String,
    pub right: String,
}

impl VerificationReport {
    pub fn compare<T: PartialEq + fmt::Display>(
        identity: Identity,
        point: Point,
        left: &T,
        right: &T,
    ) -> Self {
        let status = if left == right { Status::Pass } else { Status::Fail };
        VerificationReport {
            identity,
            point,
            status,
            left: left.to_string(),
            right: right.to_string(),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} [{}] {}: {} vs {}",
            self.identity,
            self.point,
            self.status.as_str(),
            self.left,
            self.right
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IdentitySummary {
    pub identity: Identity,
    pub checked: usize,
    pub failed: usize,
}

impl IdentitySummary {
    pub fn status(&self) -> Status {
        if self.failed == 0 {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

/// Per-identity counts, in identity order, for identities with at least one
/// report.
pub fn summarize(reports: &[VerificationReport]) -> Vec<IdentitySummary> {
    let mut out: Vec<IdentitySummary> = Vec::new();
    for r in reports {
        match out.iter_mut().find(|s| s.identity == r.identity) {
            Some(s) => {
                s.checked += 1;
                s.failed += usize::from(!r.passed());
            }
            None => out.push(IdentitySummary {
                identity: r.identity,
                checked: 1,
                failed: usize::from(!r.passed()),
            }),
        }
    }
    out.sort_by_key(|s| s.identity);
    out
}
