//! Exact-arithmetic models of symmetric pairs (g, g0) and the invariants of
//! their commuting varieties C(g1): matrix realizations of the classical
//! families, Satake-diagram combinatorics, rank strata, ab-diagram
//! classification of nilpotents, sl3-module arithmetic for the exceptional
//! cases, and the half-spinor quartic invariant.
//!
//! All computation is over the rationals; every asserted quantity is a rank,
//! a kernel dimension, or an exact polynomial identity, so nothing depends on
//! passing to an algebraically closed field.

pub mod exactlin;
pub mod excep;
pub mod liealg;
pub mod nilpotent;
pub mod poly;
pub mod report;
pub mod satake;
pub mod spinor;
pub mod strata;

pub use exactlin::{Rat, RatMat, RatVec};
pub use liealg::{Family, LieElement, SymmetricPairModel};
pub use report::{Claim, Report, Status};
pub use satake::{PairLabel, SatakeDiagram};
