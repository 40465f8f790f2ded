//! Parity polytopes of hypergraphs, the binary linear codes they span, and
//! the 0/1 polytopes whose vertex sets are subgroups of `(𝔽₂^n, ⊕)`.
//!
//! Linear algebra and linear programming are generic over
//! [`scalar::Field`]; the library itself works with exact [`Rational`]s.

pub mod bases;
pub mod classify;
pub mod codes;
pub mod error;
pub mod geometry;
pub mod gf2;
pub mod hypergraph;
pub mod linalg;
pub mod lp;
pub mod scalar;

/// Exact rational numbers with arbitrary-precision parts.
pub type Rational = num_rational::BigRational;

/// Arbitrary-precision nonnegative counts.
pub type BigCount = num_bigint::BigUint;

pub use error::{Error, Result};
pub use geometry::{FaceLattice, VertexSet01};
pub use gf2::{BitWord, GF2Matrix};
pub use hypergraph::{Graph, PreHypergraph};
