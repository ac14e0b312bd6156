//! Exact computation of covering numbers for finite unital rings.
//!
//! A cover of a ring R is a family of proper subrings whose union is R; the
//! covering number sigma(R) is the least size of such a family, when one
//! exists. This crate builds finite rings from presentations, computes their
//! subring lattices and Jacobson radicals, solves the minimum-cover problem
//! exactly, and checks the closed-form predictions that apply in the
//! commutative square-zero-radical case.

pub mod catalog;
pub mod construct;
pub mod cover;
pub mod error;
pub mod formulas;
pub mod iso;
pub mod lattice;
pub mod radical;
pub mod report;
pub mod ring;
pub mod subset;
pub mod verify;

pub use error::{Result, RingError};
pub use ring::{make_ring, product, quotient, DerivedRing, Elem, FiniteRing, RingSpec};
pub use subset::{ElemSet, SubsetAlgebra};
