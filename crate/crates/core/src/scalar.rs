//! Scalar abstractions shared by the polynomial, matrix and diagram code.
//!
//! Everything downstream is written against [`Ring`] or [`Field`]; the
//! concrete exact types live as aliases in the crate root.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, One, Signed, Zero};

/// A commutative ring with exact arithmetic.
pub trait Ring:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + FromPrimitive
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("integer embeds into every ring used here")
    }
}

impl<T> Ring for T where
    T: Clone
        + Debug
        + PartialEq
        + Zero
        + One
        + FromPrimitive
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
        + Send
        + Sync
        + 'static
{
}

/// A ring in which every nonzero element is invertible and `/` is exact.
///
/// Only rational types implement this; truncating integer division does not
/// qualify, and floating point is deliberately excluded.
pub trait Field: Ring + Div<Output = Self> {}

impl<T> Field for Ratio<T>
where
    T: Clone + Integer + Signed + Debug + Send + Sync + 'static,
    Ratio<T>: Ring,
{
}

/// An integral domain with exact division (used by fraction-free elimination).
pub trait ExactDomain: Ring + Integer {}

impl<T: Ring + Integer> ExactDomain for T {}
