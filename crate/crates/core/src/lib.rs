//! Exact computations with monomial ideals in `K[x_1, ..., x_n]`.
//!
//! The crate covers canonical monomial ideals and their arithmetic,
//! irreducible decompositions and associated primes (with an independent
//! witness-search oracle), combinatorial structure on generators, bounded
//! checks of normal torsion-freeness and the persistence properties, and a
//! small text format with a command-line front end.
//!
//! Nothing here depends on the coefficient field.

pub mod arith;
pub mod decompose;
pub mod error;
pub mod graph;
pub mod harness;
pub mod ideal;
pub mod monomial;
pub mod properties;
pub mod structure;

pub use error::{Budget, Error, Result};
pub use ideal::{minimalize, MonomialIdeal, MonomialPrime};
pub use monomial::{Monomial, Ring, RingContext};
