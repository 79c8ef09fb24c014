//! Exact scalar, polynomial, rational-function and truncated power-series
//! arithmetic.

mod error;
pub mod gcd;
mod mpoly;
mod ratfun;
mod series;
mod var;

pub use error::AlgebraError;
pub use gcd::gcd;
pub use mpoly::{poly_div_exact, MPoly};
pub use ratfun::RatFun;
pub use series::{series_deg_pow, series_exp, series_inv, series_log1p_scaled, series_mul, Series};
pub use var::{Monomial, UnknownVariable, Var, NVARS};

/// Arbitrary-precision rational, always stored reduced with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for an integer-valued [`Rational`].
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}
