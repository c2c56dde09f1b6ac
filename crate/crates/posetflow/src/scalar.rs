//! Scalar abstraction for all weight and capacity arithmetic.
//!
//! Everything in this crate is exact: weights are integers of some scalar
//! type `W` and flow values are `Ratio<W>`. The default alias at the crate
//! root is arbitrary-precision ([`num_bigint::BigInt`]), which is always
//! safe. Fixed-width instantiations (`i64`, `i128`) are supported for small
//! instances where the caller can bound the magnitudes involved.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed};

/// Integer scalar usable as a poset weight or network capacity.
pub trait Scalar:
    Integer + Signed + Clone + Hash + FromPrimitive + Debug + Display + Send + Sync + 'static
{
}

impl<T> Scalar for T where
    T: Integer + Signed + Clone + Hash + FromPrimitive + Debug + Display + Send + Sync + 'static
{
}

/// Converts a `usize` into the scalar type, panicking only when the scalar
/// type cannot represent the value (never for big integers).
pub fn from_usize<W: Scalar>(value: usize) -> W {
    W::from_usize(value).expect("count does not fit in the scalar type")
}

/// Sums a sequence of scalar references.
pub fn sum<'a, W: Scalar>(values: impl IntoIterator<Item = &'a W>) -> W {
    values.into_iter().fold(W::zero(), |acc, v| acc + v.clone())
}
