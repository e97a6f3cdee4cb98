//! Exact arithmetic for elliptic surfaces over the rational function field Q(t).
//!
//! The crate is organized bottom-up:
//!
//! * [`rat`], [`poly`], [`ratfunc`], [`place`] — the coefficient universe: exact
//!   rationals, univariate polynomials over Q, reduced rational functions, and
//!   places of the projective line (monic irreducible polynomials plus the
//!   place at infinity) with valuations and principal divisors.
//! * [`factor`] — deterministic factorization over Q (square-free splitting,
//!   rational roots for low degree, Berlekamp kernels plus Hensel lifting and
//!   subset recombination above that).
//! * [`residue`] — arithmetic in residue fields Q[t]/(p) of finite places.
//! * [`weierstrass`], [`tate`], [`surface`] — long Weierstrass models, local
//!   reduction data per place (Kodaira type, minimal model, component counts),
//!   and global invariants (χ, Euler number, j, bad places, rank bounds).
//! * [`point`], [`height`] — the Mordell–Weil group law and the exact
//!   Néron–Tate height with its intersection/correction breakdown.
//! * [`integrality`], [`lattice`], [`search`] — (S,D)-integrality tests and
//!   exhaustive enumeration of integral sections inside the explicit height
//!   bound via exact lattice-ball enumeration.
//! * [`sunit`] — the unit equation x + y = 1 in S-units of Q(t), solved
//!   outright below the Mason–Stothers degree bound.
//! * [`bounds`] — closed-form uniform constants (cover counts, genus bounds,
//!   automorphism bounds, the high-precision M(q,m) evaluation).
//! * [`report`], [`corpus`] — stable JSON report types shared by the CLI and
//!   the C ABI, and the fixture-corpus verifier.
//!
//! Everything is exact: no floating point enters any invariant. The only
//! approximate output in the crate is the decimal rendering of M(q,m), which
//! is computed in fixed-point integer arithmetic with a rigorous error budget
//! ([`fixed`]).

pub mod bounds;
pub mod corpus;
pub mod error;
pub mod factor;
pub mod fixed;
pub mod height;
pub mod integrality;
pub mod lattice;
pub mod place;
pub mod point;
pub mod poly;
pub mod rat;
pub mod ratfunc;
pub mod report;
pub mod residue;
pub mod search;
pub mod sunit;
pub mod surface;
pub mod tate;
pub mod weierstrass;

pub use error::Error;
pub use place::{P1Divisor, Place};
pub use poly::Poly;
pub use rat::{Int, Rat};
pub use ratfunc::RatFunc;
pub use weierstrass::{Model, Transform};

pub type Result<T> = std::result::Result<T, Error>;
