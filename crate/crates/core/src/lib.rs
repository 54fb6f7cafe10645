//! Exact combinatorics of the Deligne categories `Rep(S_t)`.
//!
//! The crate is organised bottom-up:
//!
//! * [`partition`]: Young diagrams, strips, hooks, enumeration.
//! * [`characters`]: symmetric group characters and (reduced) Kronecker
//!   coefficients.
//! * [`diagram`]: set-partition diagrams composed over `ℤ[t]`, the
//!   idempotents `x_R`, and evaluation at an integer `N`.
//! * [`blocks`]: block sequences of the abelian envelope at integer `t`.
//! * [`delta_complex`]: the complexes `K_{n,N}` and their cohomology.
//! * [`grothendieck`]: basis changes and tensor structure constants.
//!
//! The linear algebra and polynomial layers are generic over the scalar
//! ([`scalar::Ring`], [`scalar::Field`]); the aliases below fix the exact
//! types used throughout.

pub mod blocks;
pub mod caps;
pub mod characters;
pub mod delta_complex;
pub mod diagram;
pub mod error;
pub mod grothendieck;
pub mod linalg;
pub mod partition;
pub mod poly;
pub mod scalar;

pub use caps::Caps;
pub use error::{Error, Result};
pub use partition::Partition;

/// Arbitrary precision integers.
pub type Integer = num_bigint::BigInt;
/// Exact rationals.
pub type Rational = num_rational::BigRational;
/// Polynomials in `t` with integer coefficients.
pub type PolyInt = poly::Poly<Integer>;
/// Dense exact rational matrices.
pub type RationalMatrix = linalg::Matrix<Rational>;

/// Diagram morphisms with `ℤ[t]` coefficients.
pub type DiagramMorphism = diagram::Morphism<Integer>;
