//! Exact-arithmetic engine for Bernoulli-family number sequences and the
//! congruence-based primality characterizations built on top of them.
//!
//! The crate is organized in layers:
//!
//! - [`rational`] — arbitrary-precision reduced fractions, the universal scalar;
//! - [`series`] — dense truncated formal power series over those scalars,
//!   with exact multiplication, division, composition and the named builders
//!   (`exp`, `ln(1+t)`, trigonometric/hyperbolic kernels, polylogarithms);
//! - [`zoo`] — generators for every named sequence family (Bernoulli numbers,
//!   poly-Bernoulli, Cauchy numbers of both kinds, Nörlund numbers, tangent +
//!   secant coefficients, Stirling triangles, Motzkin, Catalan, Euler up/down,
//!   Springer, complementary Bell, tangent and reduced tangent numbers), each
//!   with a memoized exact table and, for the integer families, modular fast
//!   paths;
//! - [`residue`] — congruence calculus for exact rationals modulo an integer,
//!   including the three-valued HOLDS/FAILS/UNDEFINED verdict;
//! - [`conjectures`] — one predicate per congruence-based characterization,
//!   each returning a structured [`conjectures::CheckRecord`] that keeps the
//!   congruence side and the primality side separate so that sweeps can detect
//!   biconditional violations;
//! - [`oeis`] — b-file ingestion and cross-validation of the native generators
//!   against reference data.
//!
//! Everything is computed in exact arithmetic: congruence verdicts are
//! meaningless under floating point.

pub mod conjectures;
pub mod oeis;
pub mod primality;
pub mod rational;
pub mod residue;
pub mod series;
pub mod zoo;

pub use rational::{BigInt, Rational};
pub use residue::{ResidueStatus, ResidueVerdict};
pub use series::{PowerSeries, SeriesKind};
pub use zoo::{Family, SequenceCache, SequenceId, SequenceRecord};
