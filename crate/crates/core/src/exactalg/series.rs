//! Truncated power series over a generic coefficient ring.

use super::poly::Poly;
use super::ring::{CoeffRing, FromRational};
use num::BigRational;
use thiserror::Error;

/// Default truncation order used when a caller does not override it.
pub const DEFAULT_ORDER: usize = 16;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum SeriesError {
    #[error("truncation orders differ ({0} vs {1})")]
    OrderMismatch(usize, usize),
    #[error("constant term is not invertible in the coefficient ring")]
    NonInvertibleConstant,
    #[error("series exp needs zero constant term")]
    ExpNeedsZeroConstant,
    #[error("series log needs constant term 1")]
    LogNeedsUnitConstant,
}

/// A power series truncated at a fixed order: coefficients `c0..c_order`.
#[derive(Clone, PartialEq)]
pub struct RationalSeries<R: CoeffRing> {
    coeffs: Vec<R>,
}

impl<R: CoeffRing> RationalSeries<R> {
    pub fn from_coeffs(coeffs: Vec<R>) -> Self {
        assert!(!coeffs.is_empty(), "a series stores at least the constant term");
        RationalSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        RationalSeries {
            coeffs: vec![R::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = R::one();
        s
    }

    pub fn from_poly(p: &Poly<R>, order: usize) -> Self {
        let mut coeffs = vec![R::zero(); order + 1];
        for (i, c) in p.coeffs().iter().enumerate().take(order + 1) {
            coeffs[i] = c.clone();
        }
        RationalSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(R::zero)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.truncate(order + 1);
        coeffs.resize(order + 1, R::zero());
        RationalSeries { coeffs }
    }

    fn check_order(&self, rhs: &Self) -> Result<(), SeriesError> {
        if self.order() != rhs.order() {
            Err(SeriesError::OrderMismatch(self.order(), rhs.order()))
        } else {
            Ok(())
        }
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, SeriesError> {
        self.check_order(rhs)?;
        Ok(RationalSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.add(b))
                .collect(),
        })
    }

    pub fn neg(&self) -> Self {
        RationalSeries {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self, SeriesError> {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self, SeriesError> {
        self.check_order(rhs)?;
        let n = self.order();
        let mut out = vec![R::zero(); n + 1];
        for i in 0..=n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=(n - i) {
                out[i + j] = out[i + j].add(&self.coeffs[i].mul(&rhs.coeffs[j]));
            }
        }
        Ok(RationalSeries { coeffs: out })
    }

    /// Multiplicative inverse; the constant term must be a unit.
    pub fn inv(&self) -> Result<Self, SeriesError> {
        let c0 = self.coeffs[0]
            .try_inv()
            .ok_or(SeriesError::NonInvertibleConstant)?;
        let n = self.order();
        let mut out = vec![R::zero(); n + 1];
        out[0] = c0.clone();
        for k in 1..=n {
            let mut acc = R::zero();
            for j in 1..=k {
                acc = acc.add(&self.coeffs[j].mul(&out[k - j]));
            }
            out[k] = acc.neg().mul(&c0);
        }
        Ok(RationalSeries { coeffs: out })
    }

    pub fn div(&self, rhs: &Self) -> Result<Self, SeriesError> {
        self.mul(&rhs.inv()?)
    }

    pub fn scale(&self, c: &R) -> Self {
        RationalSeries {
            coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect(),
        }
    }

    pub fn map<S: CoeffRing>(&self, f: impl Fn(&R) -> S) -> RationalSeries<S> {
        RationalSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    /// Raises to an integer power (negative powers via `inv`).
    pub fn powi(&self, e: i64) -> Result<Self, SeriesError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one(self.order());
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base)?;
        }
        Ok(acc)
    }
}

impl<R: FromRational> RationalSeries<R> {
    /// Exponential of a series with zero constant term, via the standard
    /// convolution recurrence `n*b_n = sum_k k*a_k*b_{n-k}`.
    pub fn exp(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::ExpNeedsZeroConstant);
        }
        let n = self.order();
        let mut out = vec![R::zero(); n + 1];
        out[0] = R::one();
        for m in 1..=n {
            let mut acc = R::zero();
            for k in 1..=m {
                let ka = self.coeffs[k].mul(&R::from_i64(k as i64));
                acc = acc.add(&ka.mul(&out[m - k]));
            }
            let inv_m = R::from_rational(&BigRational::new(1.into(), (m as i64).into()));
            out[m] = acc.mul(&inv_m);
        }
        Ok(RationalSeries { coeffs: out })
    }

    /// Logarithm of a series with constant term 1.
    pub fn log(&self) -> Result<Self, SeriesError> {
        if self.coeffs[0] != R::one() {
            return Err(SeriesError::LogNeedsUnitConstant);
        }
        let n = self.order();
        let mut out = vec![R::zero(); n + 1];
        for m in 1..=n {
            let mut acc = R::zero();
            for k in 1..m {
                let kc = out[k].mul(&R::from_i64(k as i64));
                acc = acc.add(&kc.mul(&self.coeffs[m - k]));
            }
            let inv_m = R::from_rational(&BigRational::new(1.into(), (m as i64).into()));
            out[m] = self.coeffs[m].sub(&acc.mul(&inv_m));
        }
        Ok(RationalSeries { coeffs: out })
    }
}

impl<R: CoeffRing + std::fmt::Display> std::fmt::Debug for RationalSeries<R> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| format!("{c}")).collect();
        write!(f, "[{}] + O(t^{})", parts.join(", "), self.order() + 1)
    }
}

/// Renders coefficients as strings (the JSON wire form for series).
pub fn series_strings<R: CoeffRing + std::fmt::Display>(s: &RationalSeries<R>) -> Vec<String> {
    s.coeffs().iter().map(|c| format!("{c}")).collect()
}
