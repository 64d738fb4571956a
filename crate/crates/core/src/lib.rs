//! Exact matrix representations of real Clifford algebras `R_{p,q}`.
//!
//! Every representation is realized as a similarity `P · diag(a, …) · P⁻¹`
//! whose entries are multivectors, so each claimed identity can be
//! checked inside the algebra itself with rational arithmetic.

pub mod catalog;
pub mod clifford;
pub mod error;
pub mod rational;
pub mod repmap;
pub mod rings;
pub mod verify;

pub use catalog::{classify, RepSpec, Route};
pub use clifford::{Multivector, Signature};
pub use error::{Error, Result};
pub use rational::Rational;
pub use rings::{Ring, RingMatrix, RingScalar};
