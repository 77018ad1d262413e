//! Exact coefficient arithmetic.
//!
//! Everything here is generic over a [`Scalar`]: the crate root fixes the
//! scalar to an arbitrary-precision rational, but the same code runs over
//! `Ratio<i64>` or `f64` when exactness is not needed.

mod laurent;
mod scalar;
mod series;

pub use laurent::LaurentPoly;
pub use scalar::Scalar;
pub use series::Series;
