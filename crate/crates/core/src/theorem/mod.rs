//! The primitive polynomials `P_n(x)` and the verification engine.
//!
//! `P_n` is defined by `(n+1) m_n B_n^(x) = x (x(x-1))^(n mod 2) P_n(x)`.
//! [`compute_p`] builds the left side, checks it is an integer polynomial,
//! divides out the factors one at a time and checks primitivity. Each of
//! those steps fails with its own error, so a wrong `m_n` or a wrong
//! Nörlund polynomial is reported precisely instead of producing a bogus
//! `P_n`. No sign normalization is applied: the exact quotient is `P_n`.

mod report;
mod verify;

pub use report::{summarize, Identity, IdentitySummary, Point, Status, VerificationReport};
pub use verify::{
    run_suite, verify_constant_terms, verify_lemma1, verify_lemma2_binomial_form, verify_theorem,
    NorlundOracle, SuiteConfig, SuiteOutcome, Verifier, VerifierBounds,
};

use num_traits::One;

use crate::arith::{Integer, PolyZ};
use crate::error::{Error, Result};
use crate::norlund::{norlund_poly, NorlundPoly};
use crate::sequences::m;

/// `P_n(x)` together with the `m_n` it was scaled by.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimitivePoly {
    pub n: usize,
    pub poly: PolyZ,
    pub m_n: Integer,
}

impl PrimitivePoly {
    /// `P_n(0)`.
    pub fn constant_term(&self) -> Integer {
        self.poly.coeff(0)
    }

    /// `n - 1` for even `n`, `n - 3` for odd `n`.
    pub fn expected_degree(n: usize) -> usize {
        if n % 2 == 0 {
            n - 1
        } else {
            n - 3
        }
    }
}

/// `P_n(x)` from an already computed `B_n^(x)` and `m_n`.
pub fn primitive_from_norlund(norlund: &NorlundPoly, m_n: &Integer) -> Result<PrimitivePoly> {
    let n = norlund.n;
    if n < 2 {
        return Err(Error::InvalidArgument("P_n is defined for n >= 2"));
    }
    let scale = m_n * Integer::from(n + 1);
    let scaled = norlund
        .poly
        .scale(&crate::arith::rat_from_int(scale))
        .to_integer()
        .ok_or(Error::ScalingFailed { n })?;

    let x = PolyZ::x();
    let mut quotient = scaled
        .exact_div(&x)
        .map_err(|_| Error::FactorMissing { n, factor: "x" })?;
    if n % 2 == 1 {
        // x(x-1) = x^2 - x
        let x_x1 = PolyZ::new(alloc::vec![Integer::from(0), Integer::from(-1), Integer::from(1)]);
        quotient = quotient
            .exact_div(&x_x1)
            .map_err(|_| Error::FactorMissing { n, factor: "x(x-1)" })?;
    }
    match quotient.content() {
        Ok(c) if c.is_one() => {}
        _ => return Err(Error::NotPrimitive { n }),
    }
    Ok(PrimitivePoly {
        n,
        poly: quotient,
        m_n: m_n.clone(),
    })
}

/// `P_n(x)` for `n >= 2`.
pub fn compute_p(n: usize) -> Result<PrimitivePoly> {
    if n < 2 {
        return Err(Error::InvalidArgument("P_n is defined for n >= 2"));
    }
    primitive_from_norlund(&norlund_poly(n), &m(n as u64)?)
}
