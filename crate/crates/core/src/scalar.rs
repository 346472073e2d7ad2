//! Scalar bounds shared by the exact and floating point parts of the crate.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_traits::{FromPrimitive, PrimInt, Signed, ToPrimitive};

pub use num_traits::Float;

/// Signed machine integer usable as the numerator/denominator of an exact
/// fraction or as an entry of an integer matrix.
pub trait ExactInt:
    PrimInt + Integer + Signed + FromPrimitive + ToPrimitive + Debug + Display + Hash + Send + Sync + 'static
{
}

impl<T> ExactInt for T where
    T: PrimInt + Integer + Signed + FromPrimitive + ToPrimitive + Debug + Display + Hash + Send + Sync + 'static
{
}

/// Converts a simplex count into the scalar type.
///
/// Panics if the count does not fit, which for `i32` and wider only happens on
/// complexes far beyond what fits in memory.
pub(crate) fn count<T: ExactInt>(n: usize) -> T {
    T::from_usize(n).expect("simplex count overflows the scalar type")
}

pub(crate) fn real<F: Float>(x: f64) -> F {
    F::from(x).expect("value representable in the float type")
}
