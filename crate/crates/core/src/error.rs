use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

/// Every failure the library can report.
///
/// The variants from [`Error::MNotInteger`] down correspond to a broken
/// identity: they abort a verification run instead of being reported as a
/// failed comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    DivisionByZero,
    ContentOfZero,
    NotDivisible,
    InvalidSeriesConstantTerm,
    SeriesOrderMismatch { left: usize, right: usize },
    CoefficientIndexOutOfRange { n: usize, k: usize },
    NotPrime(u64),
    IndexOutOfTriangle { n: i64, k: i64 },
    /// A precondition on an argument was violated.
    InvalidArgument(&'static str),
    MNotInteger { n: u64, p: u64 },
    ScalingFailed { n: usize },
    FactorMissing { n: usize, factor: &'static str },
    NotPrimitive { n: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZero => f.write_str("division by zero"),
            Error::ContentOfZero => f.write_str("content of zero polynomial undefined"),
            Error::NotDivisible => f.write_str("not divisible"),
            Error::InvalidSeriesConstantTerm => f.write_str("invalid series constant term"),
            Error::SeriesOrderMismatch { left, right } => {
                write!(f, "series order mismatch: {left} vs {right}")
            }
            Error::CoefficientIndexOutOfRange { n, k } => {
                write!(f, "coefficient index out of range: k={k} for n={n}")
            }
            Error::NotPrime(p) => write!(f, "not a prime: {p}"),
            Error::IndexOutOfTriangle { n, k } => {
                write!(f, "index out of triangle: s({n}, {k})")
            }
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
            Error::MNotInteger { n, p } => {
                write!(f, "m_n not an integer: negative valuation at p={p} for n={n}")
            }
            Error::ScalingFailed { n } => {
                write!(f, "scaling failed: (n+1) m_n B_n^(x) is not integral for n={n}")
            }
            Error::FactorMissing { n, factor } => {
                write!(f, "factor missing: {factor} does not divide (n+1) m_n B_n^(x) for n={n}")
            }
            Error::NotPrimitive { n } => write!(f, "not primitive: P_{n} has content > 1"),
        }
    }
}

impl core::error::Error for Error {}
