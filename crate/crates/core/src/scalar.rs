use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Zero};

/// Coefficient ring of a series.
///
/// Only ring operations and an exact zero test are required; the support of a
/// series is the set of exponents whose coefficient is not `zero()`.
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn from_i64(v: i64) -> Self;
}

/// A [`Scalar`] in which every nonzero element may be inverted.
pub trait FieldScalar: Scalar {
    /// Multiplicative inverse, `None` for zero (or for zero divisors in
    /// rings that are not actually fields).
    fn checked_inv(&self) -> Option<Self>;
}

macro_rules! float_scalar {
    ($($t:ty),*) => {$(
        impl Scalar for $t {
            fn from_i64(v: i64) -> Self {
                v as $t
            }
        }

        impl FieldScalar for $t {
            fn checked_inv(&self) -> Option<Self> {
                if *self == 0.0 { None } else { Some(1.0 / *self) }
            }
        }
    )*};
}

float_scalar!(f32, f64);

macro_rules! ratio_scalar {
    ($($t:ty),*) => {$(
        impl Scalar for Ratio<$t> {
            fn from_i64(v: i64) -> Self {
                Ratio::from_integer(v as $t)
            }
        }

        impl FieldScalar for Ratio<$t> {
            fn checked_inv(&self) -> Option<Self> {
                if self.is_zero() { None } else { Some(self.recip()) }
            }
        }
    )*};
}

ratio_scalar!(i64, i128);

impl Scalar for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
}

impl FieldScalar for BigRational {
    fn checked_inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}
