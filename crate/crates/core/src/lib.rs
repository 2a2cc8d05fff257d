//! Exact-arithmetic verification and audit kernel for finite-dimensional
//! BiHom-associative algebras, BiHom-coalgebras, BiHom-bialgebras and
//! BiHom-Hopf algebras.
//!
//! Everything is computed over the rationals with arbitrary precision:
//! axiom checking by basis evaluation, structure transport and the closed
//! constructions, antipode solving by exact linear algebra, isomorphism
//! decisions through invariant fingerprints plus a Buchberger Groebner
//! engine, and a catalog audit that re-verifies a set of published
//! classification tables entry by entry.

pub mod algebra;
pub mod bialgebra;
pub mod catalog;
pub mod coalgebra;
pub mod exact;
pub mod format;
pub mod invariants;
pub mod polysys;

pub use exact::{Matrix, Rational};
