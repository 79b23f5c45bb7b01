//! Polynomiality-in-p detection for graph hypersurface counts: interpolate
//! on enough primes, then demand exact agreement on held-out primes.

use super::counting::{count_points, CountError};
use super::graph::Graph;
use crate::exactalg::{rat, BigInt, BigRational, Poly};
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum FitError {
    #[error("need at least {need} primes (degree bound {degree} plus one plus {holdout} held out), got {got}")]
    TooFewPrimes {
        need: usize,
        degree: usize,
        holdout: usize,
        got: usize,
    },
    #[error("{0} is not prime")]
    NotPrime(u64),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FitStatus {
    /// Counts match a single polynomial with these coefficients (ascending).
    Polynomial(Vec<BigRational>),
    /// First prime whose count the interpolant fails to reproduce.
    NonPolynomial(u64),
    /// Counting failed (typically the enumeration budget); no verdict.
    Inconclusive(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FitReport {
    pub status: FitStatus,
    pub primes_used: Vec<u64>,
    pub primes_held_out: Vec<u64>,
}

/// The first `n` primes, smallest first.
pub fn first_primes(n: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(n);
    let mut c = 2u64;
    while out.len() < n {
        if super::counting::is_prime(c) {
            out.push(c);
        }
        c += 1;
    }
    out
}

/// Lagrange interpolation through `points`, exact over the rationals.
pub fn lagrange_interpolate(points: &[(u64, BigInt)]) -> Poly<BigRational> {
    let mut acc = Poly::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        let mut basis = Poly::constant(BigRational::from_integer(yi.clone()));
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            let scale = (rat(*xi as i64) - rat(*xj as i64)).recip();
            // (x - xj) / (xi - xj)
            let lin = Poly::new(vec![-rat(*xj as i64) * &scale, scale]);
            basis = basis.mul(&lin);
        }
        acc = acc.add(&basis);
    }
    acc
}

/// Fits the first `degree_bound + 1` counts and checks the rest; the counts
/// must come in ascending prime order.
pub fn fit_report_from_counts(
    degree_bound: usize,
    counts: &[(u64, BigInt)],
    holdout: usize,
) -> Result<FitReport, FitError> {
    let need = degree_bound + 1 + holdout;
    if counts.len() < need {
        return Err(FitError::TooFewPrimes {
            need,
            degree: degree_bound,
            holdout,
            got: counts.len(),
        });
    }
    let (fit_points, held_out) = counts.split_at(degree_bound + 1);
    let primes_used: Vec<u64> = fit_points.iter().map(|(p, _)| *p).collect();
    let primes_held_out: Vec<u64> = held_out.iter().map(|(p, _)| *p).collect();
    let poly = lagrange_interpolate(fit_points);
    let status = check_fit(&poly, counts);
    Ok(FitReport {
        status,
        primes_used,
        primes_held_out,
    })
}

fn check_fit(poly: &Poly<BigRational>, counts: &[(u64, BigInt)]) -> FitStatus {
    for (p, n) in counts {
        let v = poly.eval(&rat(*p as i64));
        if !v.is_integer() || v.numer() != n {
            return FitStatus::NonPolynomial(*p);
        }
    }
    FitStatus::Polynomial(poly.coeffs().to_vec())
}

/// Counts the graph hypersurface at each prime and reports whether the
/// counts are polynomial in `p`.
pub fn polynomiality_test(g: &Graph, primes: &[u64], holdout: usize) -> Result<FitReport, FitError> {
    let degree_bound = g.edge_count();
    let need = degree_bound + 1 + holdout;
    if primes.len() < need {
        return Err(FitError::TooFewPrimes {
            need,
            degree: degree_bound,
            holdout,
            got: primes.len(),
        });
    }
    let mut counts = Vec::with_capacity(primes.len());
    for &p in primes {
        if !super::counting::is_prime(p) {
            return Err(FitError::NotPrime(p));
        }
        match count_points(g, p) {
            Ok(rec) => counts.push((p, BigInt::from(rec.affine))),
            Err(CountError::Budget(e)) => {
                return Ok(FitReport {
                    status: FitStatus::Inconclusive(e.to_string()),
                    primes_used: vec![],
                    primes_held_out: vec![],
                })
            }
            Err(e) => {
                return Ok(FitReport {
                    status: FitStatus::Inconclusive(e.to_string()),
                    primes_used: vec![],
                    primes_held_out: vec![],
                })
            }
        }
    }
    fit_report_from_counts(degree_bound, &counts, holdout)
}

impl FitStatus {
    /// Coefficient display, constant first, for reports.
    pub fn describe(&self) -> String {
        match self {
            FitStatus::Polynomial(coeffs) => {
                let p = Poly::new(coeffs.clone());
                if p.is_zero() {
                    "Polynomial: 0".to_string()
                } else {
                    format!("Polynomial: {}", p.display("p"))
                }
            }
            FitStatus::NonPolynomial(p) => format!("NonPolynomial: fails at p = {p}"),
            FitStatus::Inconclusive(why) => format!("Inconclusive: {why}"),
        }
    }
}
