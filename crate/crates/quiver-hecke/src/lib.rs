//! Exact computational models of nil-Hecke, KLR (quiver Hecke) and extended
//! KLR algebras, their polynomial representations, and a torus-fixed-point
//! equivariant Schubert calculator.
//!
//! Everything is exact: coefficients are arbitrary-precision rationals, all
//! identities are checked as equalities of canonical normal forms, and all
//! homology/rank computations are integer-exact linear algebra.

pub mod extrep;
pub mod polyalg;
pub mod quivercomb;
pub mod schubert;
pub mod smash;
