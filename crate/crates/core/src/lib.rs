//! Exact computation of Stirling numbers of the first kind, Bernoulli numbers,
//! Nörlund polynomials `B_n^(x)`, the integer sequence `m_n` (OEIS A163176) and
//! the primitive integer polynomials `P_n(x)` that satisfy
//!
//! ```text
//! s(n, n-j) = C(n, j+1) * (n(n-1))^(j mod 2) * P_j(n) / m_j      (n >= j >= 2)
//! ```
//!
//! together with a verification engine that checks every identity relating
//! these objects against independently computed oracles.
//!
//! Everything is exact: integers are arbitrary precision and rationals are
//! always kept in lowest terms. No floating point is used anywhere.
//!
//! Bernoulli numbers follow the `z/(e^z - 1)` convention, so `B_1 = -1/2`.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod arith;
pub mod bernoulli;
mod error;
pub mod norlund;
pub mod sequences;
pub mod stirling;
pub mod theorem;

pub use arith::{binom, rat_normalize, Integer, PolyQ, PolyZ, Rational, SeriesQ};
pub use bernoulli::{bernoulli_oracle, bernoulli_table, BernoulliTable};
pub use error::{Error, Result};
pub use norlund::{liu_srivastava_coeff, norlund_poly, norlund_table, NorlundPoly};
pub use sequences::{d, d_adelberg, m, m_sequence, primes_upto, vp_factorial, MSequence};
pub use stirling::{stirling1, stirling_via_norlund, StirlingTable};
pub use theorem::{compute_p, PrimitivePoly, Status, VerificationReport};
