//! Exact generating functions for Hirzebruch genera of symmetric products.
//!
//! The crate computes `χ_{-y}` and `χ̂_{-y}` generating series of symmetric
//! products `X^n / S_n` and of the symmetric-group orbifolds `(X^n, S_n)` from
//! Hodge-diamond input, and checks each closed form against an independent
//! brute-force route: graded-symmetric powers, Molien averages, commuting
//! pairs and truncated Chern-root calculus on model manifolds.
//!
//! The algebra is generic over the coefficient [`algebra::Scalar`]; the
//! aliases below fix it to exact rationals, which is what every pipeline in
//! the crate uses.

pub mod algebra;
pub mod error;
pub mod genera;
pub mod guards;
pub mod hodge;
pub mod io;
pub mod ktheory;
pub mod lefschetz;
pub mod partitions;
pub mod verify;

pub use error::{Error, Result};

/// Arbitrary-precision rational, the coefficient field everywhere.
pub type Rational = num_rational::BigRational;
/// Laurent polynomial in `u = y^{1/2}` over [`Rational`].
pub type YPolynomial = algebra::LaurentPoly<Rational>;
/// Truncated power series in `q` over [`YPolynomial`].
pub type QSeries = algebra::Series<Rational>;

/// Floating-point variants, for quick numerical sanity checks only.
pub type YPolynomialF64 = algebra::LaurentPoly<f64>;
pub type QSeriesF64 = algebra::Series<f64>;

pub use algebra::Scalar;
