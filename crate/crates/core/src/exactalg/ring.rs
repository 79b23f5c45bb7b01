//! Coefficient-ring abstraction shared by polynomials, series and rational
//! functions.

use num::{BigInt, BigRational, One, Signed, Zero};

/// A commutative ring with decidable zero test and partial exact division.
///
/// `try_div` must return `Some(q)` exactly when `self = q * rhs` has a
/// solution in the ring, and `try_inv` when the element is a unit. All
/// arithmetic is exact; there is no rounding anywhere.
pub trait CoeffRing: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }
    /// Multiplicative inverse, when the element is a unit of the ring.
    fn try_inv(&self) -> Option<Self>;
    /// Exact division in the ring, when the quotient exists.
    fn try_div(&self, rhs: &Self) -> Option<Self>;
    fn from_i64(v: i64) -> Self;
}

/// Rings containing the rational numbers (needed for series exp/log, where
/// coefficients get divided by the series index).
pub trait FromRational: CoeffRing {
    fn from_rational(r: &BigRational) -> Self;
}

/// Marker for rings where `try_div` succeeds for every nonzero divisor.
pub trait CoeffField: CoeffRing {}

impl CoeffRing for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn try_inv(&self) -> Option<Self> {
        if self.abs().is_one() {
            Some(self.clone())
        } else {
            None
        }
    }
    fn try_div(&self, rhs: &Self) -> Option<Self> {
        if Zero::is_zero(rhs) {
            return None;
        }
        let (q, r) = num::Integer::div_rem(self, rhs);
        if Zero::is_zero(&r) {
            Some(q)
        } else {
            None
        }
    }
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
}

impl CoeffRing for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn try_inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn try_div(&self, rhs: &Self) -> Option<Self> {
        if Zero::is_zero(rhs) {
            None
        } else {
            Some(self / rhs)
        }
    }
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
}

impl FromRational for BigRational {
    fn from_rational(r: &BigRational) -> Self {
        r.clone()
    }
}

impl CoeffField for BigRational {}
