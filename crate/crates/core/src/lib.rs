//! Exact invariants of the lattice polytopes and graded posets attached to
//! arbors (rooted trees with multiplicity-decorated vertices).
//!
//! The polytope of an arbor is cut out by nonnegativity and one inequality
//! per vertex bounding the coordinate sum of its subtree block; the poset
//! is the coordinatewise order on its lattice points. Everything else is
//! derived from those two objects: Ehrhart and Zeta polynomials, the
//! K-polynomial and M-triangle, f- and h-vectors, the slice-volume function
//! and its transform, and closed-form families with their cross-checks.
//!
//! All arithmetic is exact, over arbitrary-precision rationals.

pub mod algebra;
pub mod arbor;
mod error;
pub mod families;
pub mod golden;
pub mod invariants;
pub mod polytope;
pub mod poset;
pub mod volume;

pub use error::{Error, Result};
