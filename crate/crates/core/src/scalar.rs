//! Coefficient-ring abstraction for polynomials and power series.
//!
//! Everything in this crate computes exactly, so the scalar bound requires
//! `Eq` on purpose: big integers and big rationals qualify, floating-point
//! types do not.

use std::fmt::Debug;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

/// An exact commutative ring with the operations the polynomial and series
/// code needs. Blanket-implemented; `num_bigint::BigInt`,
/// `num_rational::BigRational`, and the built-in signed integers all qualify.
pub trait Scalar:
    Clone
    + Debug
    + Eq
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
{
}

impl<T> Scalar for T where
    T: Clone
        + Debug
        + Eq
        + Zero
        + One
        + Neg<Output = T>
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + AddAssign
        + SubAssign
        + MulAssign
{
}

/// An exact field. Deliberately *not* blanket-implemented: `BigInt` has a
/// truncating `Div` that must never reach polynomial long division, so only
/// genuine fields opt in.
pub trait FieldScalar: Scalar + Div<Output = Self> {}

impl FieldScalar for num_rational::BigRational {}
