//! Exact arithmetic substrate: rationals, polynomials, truncated series,
//! rational functions.
//!
//! Everything downstream works over a coefficient ring implementing
//! [`CoeffRing`]; the concrete rings used in this crate are `BigInt`,
//! `BigRational`, the localized Grothendieck-ring classes of
//! [`crate::k0ring`], and univariate rational functions (for two-variable
//! zetas).

mod ring;
mod poly;
mod multipoly;
mod series;
mod ratfunc;

pub use ring::{CoeffField, CoeffRing, FromRational};
pub use poly::{gcd_int_poly, gcd_rat_poly, Poly};
pub use multipoly::{Monomial, MultiPoly};
pub use series::{RationalSeries, SeriesError, DEFAULT_ORDER};
pub use ratfunc::{RationalFunction, ReconstructError};

pub use num::BigInt;
pub use num::BigRational;

/// Convenience: rational from an `i64`.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Convenience: rational `n/d`.
pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}
