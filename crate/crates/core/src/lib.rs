//! Exact-arithmetic Schubert calculus on generalized flag varieties G/P.
//!
//! The crate computes both the cup product and the Belkale-Kumar product on
//! H*(G/P) for any simple type A-G, realizes the X(Z) x Z filtration of the
//! cohomology ring together with its associated graded product, implements
//! Kostant's harmonic-representative operators on the exterior algebra of
//! u^- (+) u at small rank, and ships exhaustive verification harnesses for
//! the product-on-partition-triples conjecture and its relatives.
//!
//! Everything is exact: root data live in the simple-root basis over the
//! integers, geometry is carried by a rational Gram matrix, and all
//! coefficients are arbitrary-precision rationals.

pub mod bk;
pub mod kostant;
pub mod parabolic;
pub mod rootsys;
pub mod schubert;

pub use parabolic::{GdVector, ParabolicContext, ZWeight};
pub use rootsys::{RootSystem, Series, TypeLabel, WeylElt};
pub use schubert::{CohClass, CoinvariantPoly};

/// Exact scalar used throughout: arbitrary-precision rational.
pub type Rat = num::BigRational;

pub(crate) fn rat(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

pub(crate) fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}
