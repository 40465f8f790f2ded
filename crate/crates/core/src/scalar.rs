//! Scalar abstraction for the linear algebra and LP code.
//!
//! Everything that needs division is generic over [`Field`]. The library
//! instantiates it with the exact [`Rational`](crate::Rational) type; the
//! fixed-width ratios and `f64` also satisfy the bound and are used in tests
//! as cross-checks on small inputs, where neither overflow nor rounding can
//! occur.

use std::fmt::Debug;
use std::ops::Neg;

use num_traits::{FromPrimitive, Num};

/// An ordered field with exact zero tests.
pub trait Field: Clone + Debug + PartialOrd + Num + Neg<Output = Self> + Send + Sync {
    fn from_int(v: i64) -> Self;

    fn is_positive(&self) -> bool {
        *self > Self::zero()
    }

    fn is_negative(&self) -> bool {
        *self < Self::zero()
    }
}

impl<T> Field for T
where
    T: Clone + Debug + PartialOrd + Num + Neg<Output = T> + FromPrimitive + Send + Sync,
{
    fn from_int(v: i64) -> Self {
        T::from_i64(v).expect("small integers are representable")
    }
}

/// Converts a 0/1 coordinate into a field element.
pub fn bit<T: Field>(b: bool) -> T {
    if b {
        T::one()
    } else {
        T::zero()
    }
}
