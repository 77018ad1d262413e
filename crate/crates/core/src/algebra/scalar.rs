use std::fmt::Debug;
use std::ops::Neg;

use num_traits::{FromPrimitive, Num};

/// Coefficient field for polynomials and series.
///
/// Anything that is a numeric field with integer embedding qualifies; the
/// exact computations use `BigRational`.
pub trait Scalar: Clone + PartialEq + Debug + Num + Neg<Output = Self> + FromPrimitive {
    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("integer must embed in the scalar type")
    }
}

impl<T> Scalar for T where T: Clone + PartialEq + Debug + Num + Neg<Output = T> + FromPrimitive {}
