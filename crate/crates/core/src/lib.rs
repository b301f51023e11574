//! Exact computations for symplectic ball packings of the projective plane.
//!
//! The crate covers two halves of the same picture:
//!
//! * the lattice side ([`lattice`], [`chambers`]): exceptional and wall classes in
//!   the second homology of the n-fold blow-up, admissibility of capacity vectors,
//!   and exhaustive enumeration of stability chambers by exact linear feasibility;
//! * the algebra side ([`gradedalg`], [`dga`], [`kriz`], [`ballmodels`]): finitely
//!   presented graded-commutative algebras over the rationals, their differentials,
//!   per-degree cohomology, and the concrete models of embedding spaces and
//!   configuration spaces of points in projective space.
//!
//! [`confgeom`] classifies small point configurations in the projective plane.
//!
//! Everything is exact. The crate is `no_std` and only needs `alloc`.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod ballmodels;
pub mod chambers;
pub mod confgeom;
pub mod dga;
mod error;
pub mod gradedalg;
pub mod kriz;
pub mod lattice;
pub mod linalg;
pub mod lp;
pub mod rational;

pub use error::{Error, Result};
pub use rational::Rational;
