//! Exact generation and verification of neo balcobalancing numbers.
//!
//! The crate generates the balancing, cobalancing, Lucas-balancing,
//! Pell, Pell-Lucas, triangular and square-triangular families together with
//! the four neo families (`B`, `C`, `R`, `CR`), and checks the identities that
//! tie them together in exact arithmetic:
//!
//! - [`exactnum`]: the integer [`Scalar`] abstraction and exact Q(√2) arithmetic
//! - [`sequences`]: the classic families, each by recurrence and by Binet form
//! - [`pell`]: the solution orbit of `x² − 2y² = −9`
//! - [`neobalco`]: the neo quads by closed form, Binet form and recurrence
//! - [`identities`]: per-index checkers and range reports
//! - [`oracle`]: brute-force scan of the defining sums
//! - [`cli`]: the `neobalco` command-line front end
//!
//! Generators are generic over the integer scalar. [`Int`] (a [`BigInt`]) is
//! the default; fixed-width integers work for short ranges.
//!
//! ```
//! use neobalco::{neobalco::neo_quad_closed, Int};
//!
//! let q = neo_quad_closed::<Int>(2).unwrap();
//! assert_eq!((q.b, q.c, q.r, q.cr), (180.into(), 507.into(), 73.into(), 105.into()));
//! ```

pub mod cli;
pub mod error;
pub mod exactnum;
pub mod identities;
pub mod neobalco;
pub mod oracle;
pub mod pell;
pub mod sequences;

pub use error::{Error, Result};
pub use exactnum::{QuadSurd, Scalar};

pub use num_bigint::BigInt;

/// Arbitrary-precision integer used throughout.
pub type Int = BigInt;
/// Canonical fraction of [`Int`]s.
pub type Rational = num_rational::Ratio<Int>;
/// Element of Q(√2) with [`Rational`] coefficients.
pub type Surd = QuadSurd<Int>;
/// Neo quad over [`Int`].
pub type NeoQuad = neobalco::NeoQuad<Int>;
/// Orbit point of `x² − 2y² = −9` over [`Int`].
pub type SolutionPair = pell::SolutionPair<Int>;
/// Oracle hit over [`Int`].
pub type OracleHit = oracle::OracleHit<Int>;
