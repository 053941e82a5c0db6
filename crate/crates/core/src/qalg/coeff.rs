//! The coefficient-field abstraction shared by all polynomial types.

use std::fmt;
use std::hash::Hash;
use std::ops::{Div, Neg, Sub};

use num_traits::{One, Zero};

/// An exact field scalar. Satisfied by `Rat` (ℚ) and [`GaussRat`](super::gauss::GaussRat)
/// (ℚ(i)); every polynomial and rational-function type in this crate is
/// generic over it.
pub trait Scalar:
    Clone
    + PartialEq
    + Eq
    + Hash
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Div<Output = Self>
{
}

impl<T> Scalar for T where
    T: Clone
        + PartialEq
        + Eq
        + Hash
        + fmt::Debug
        + fmt::Display
        + Zero
        + One
        + Neg<Output = T>
        + Sub<Output = T>
        + Div<Output = T>
{
}
