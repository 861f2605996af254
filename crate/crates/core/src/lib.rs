//! Exact linear algebra over matrix *-rings: generalized inverses
//! (inner, reflexive, group, {1,3}, {1,4}, Moore–Penrose, inverse along an
//! element, core, w-core), decision procedures for nine matrix partial
//! orders, and a property harness that exercises the algebraic laws tying
//! them together on random and exhaustively enumerated instances.
//!
//! All arithmetic is exact: rationals, Gaussian rationals, or a prime field,
//! with the star of a matrix given by the (conjugate) transpose.

pub mod doc;
pub mod fixtures;
pub mod geninv;
pub mod harness;
pub mod matrix;
pub mod orders;
pub mod scalar;

pub use matrix::Matrix;
pub use scalar::{Scalar, ScalarDomain};
