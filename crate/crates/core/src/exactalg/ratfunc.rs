//! Rational functions in one variable, with linear-algebra recognition of
//! truncated series.

use super::poly::Poly;
use super::ring::{CoeffField, CoeffRing, FromRational};
use super::series::{RationalSeries, SeriesError};
use num::BigRational;
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ReconstructError {
    #[error("series order {have} too small: need at least num_deg + 2*den_deg + 1 = {need}")]
    InsufficientOrder { need: usize, have: usize },
    #[error("no rational function within the degree bounds matches the series")]
    NotFound,
}

/// A quotient of polynomials. Construction reduces by the polynomial gcd
/// when the coefficient arithmetic allows it and normalizes the lowest
/// nonzero denominator coefficient to 1 when that coefficient is a unit;
/// equality always compares by cross-multiplication, so two representations
/// of the same quotient are equal even when reduction was impossible.
#[derive(Clone)]
pub struct RationalFunction<R: CoeffRing> {
    num: Poly<R>,
    den: Poly<R>,
}

impl<R: CoeffRing> RationalFunction<R> {
    pub fn new(num: Poly<R>, den: Poly<R>) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut num = num;
        let mut den = den;
        if num.is_zero() {
            return RationalFunction {
                num,
                den: Poly::one(),
            };
        }
        if let Some(g) = num.gcd(&den) {
            if g.degree().map_or(false, |d| d > 0) {
                if let (Some(n2), Some(d2)) = (num.exact_div(&g), den.exact_div(&g)) {
                    num = n2;
                    den = d2;
                }
            }
        }
        let low = den
            .coeffs()
            .iter()
            .find(|c| !c.is_zero())
            .expect("nonzero denominator");
        if let Some(inv) = low.try_inv() {
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        RationalFunction { num, den }
    }

    pub fn from_poly(p: Poly<R>) -> Self {
        RationalFunction {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(c: R) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn one() -> Self {
        Self::constant(R::one())
    }

    pub fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }

    pub fn num(&self) -> &Poly<R> {
        &self.num
    }

    pub fn den(&self) -> &Poly<R> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        RationalFunction::new(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }

    pub fn neg(&self) -> Self {
        RationalFunction {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        RationalFunction::new(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }

    pub fn div(&self, rhs: &Self) -> Self {
        assert!(!rhs.is_zero(), "division by the zero rational function");
        RationalFunction::new(self.num.mul(&rhs.den), self.den.mul(&rhs.num))
    }

    pub fn scale(&self, c: &R) -> Self {
        RationalFunction::new(self.num.scale(c), self.den.clone())
    }

    pub fn powi(&self, e: i64) -> Self {
        let base = if e < 0 {
            assert!(!self.is_zero(), "inverting the zero rational function");
            RationalFunction::new(self.den.clone(), self.num.clone())
        } else {
            self.clone()
        };
        let mut acc = Self::one();
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        acc
    }

    /// Substitutes `t -> c*t`.
    pub fn scale_var(&self, c: &R) -> Self {
        RationalFunction::new(scale_var_poly(&self.num, c), scale_var_poly(&self.den, c))
    }

    /// Substitutes `t -> c/t`, staying a rational function in `t`.
    pub fn subst_c_over_t(&self, c: &R) -> Self {
        let scaled = self.scale_var(c);
        let dn = scaled.num.degree().expect("nonzero numerator") as i64;
        let dd = scaled.den.degree().expect("nonzero denominator") as i64;
        let rn = scaled.num.reverse();
        let rd = scaled.den.reverse();
        if dd >= dn {
            RationalFunction::new(rn.shift((dd - dn) as usize), rd)
        } else {
            RationalFunction::new(rn, rd.shift((dn - dd) as usize))
        }
    }

    /// Expands as a truncated series; needs an invertible denominator
    /// constant term.
    pub fn expand(&self, order: usize) -> Result<RationalSeries<R>, SeriesError> {
        RationalSeries::from_poly(&self.num, order).div(&RationalSeries::from_poly(&self.den, order))
    }

    pub fn eval(&self, x: &R) -> Option<R> {
        self.num.eval(x).try_div(&self.den.eval(x))
    }

    pub fn map<S: CoeffRing>(&self, f: impl Fn(&R) -> S) -> RationalFunction<S> {
        RationalFunction::new(self.num.map(&f), self.den.map(&f))
    }

    pub fn display(&self, var: &str) -> String
    where
        R: std::fmt::Display,
    {
        if self.den == Poly::one() {
            self.num.display(var)
        } else {
            format!("({}) / ({})", self.num.display(var), self.den.display(var))
        }
    }
}

fn scale_var_poly<R: CoeffRing>(p: &Poly<R>, c: &R) -> Poly<R> {
    let mut pw = R::one();
    let coeffs = p
        .coeffs()
        .iter()
        .map(|a| {
            let out = a.mul(&pw);
            pw = pw.mul(c);
            out
        })
        .collect();
    Poly::new(coeffs)
}

impl<R: CoeffRing> PartialEq for RationalFunction<R> {
    fn eq(&self, other: &Self) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

impl<R: CoeffRing + std::fmt::Display> std::fmt::Debug for RationalFunction<R> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.display("t"))
    }
}

/// In coefficient position (two-variable zetas) rational functions print in
/// the variable `u`.
impl std::fmt::Display for RationalFunction<BigRational> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.display("u"))
    }
}

/// Rational functions over the rationals form a field.
impl CoeffRing for RationalFunction<BigRational> {
    fn zero() -> Self {
        RationalFunction::zero()
    }
    fn one() -> Self {
        RationalFunction::one()
    }
    fn is_zero(&self) -> bool {
        RationalFunction::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        RationalFunction::add(self, rhs)
    }
    fn neg(&self) -> Self {
        RationalFunction::neg(self)
    }
    fn mul(&self, rhs: &Self) -> Self {
        RationalFunction::mul(self, rhs)
    }
    fn try_inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(RationalFunction::new(self.den.clone(), self.num.clone()))
        }
    }
    fn try_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            None
        } else {
            Some(self.div(rhs))
        }
    }
    fn from_i64(v: i64) -> Self {
        RationalFunction::constant(BigRational::from_integer(v.into()))
    }
}

impl CoeffField for RationalFunction<BigRational> {}

impl FromRational for RationalFunction<BigRational> {
    fn from_rational(r: &BigRational) -> Self {
        RationalFunction::constant(r.clone())
    }
}

/// Finds `p/q` with `deg p <= max_num_deg`, `deg q <= max_den_deg` whose
/// expansion matches the series through its full order. The order must be at
/// least `max_num_deg + 2*max_den_deg + 1` so the linear system
/// overdetermines the answer.
pub fn reconstruct<F: CoeffField>(
    series: &RationalSeries<F>,
    max_num_deg: usize,
    max_den_deg: usize,
) -> Result<RationalFunction<F>, ReconstructError> {
    let n = series.order();
    let need = max_num_deg + 2 * max_den_deg + 1;
    if n < need {
        return Err(ReconstructError::InsufficientOrder { need, have: n });
    }
    // Unknown denominator q_0..q_dq; each order k > max_num_deg gives the
    // homogeneous equation sum_j q_j c_{k-j} = 0.
    let ncols = max_den_deg + 1;
    let rows: Vec<Vec<F>> = (max_num_deg + 1..=n)
        .map(|k| {
            (0..ncols)
                .map(|j| {
                    if j > k {
                        F::zero()
                    } else {
                        series.coeff(k - j)
                    }
                })
                .collect()
        })
        .collect();
    let q = nullspace_vector(rows, ncols).ok_or(ReconstructError::NotFound)?;
    let den = Poly::new(q);
    if den.is_zero() {
        return Err(ReconstructError::NotFound);
    }
    // Numerator = truncation of series * den.
    let den_series = RationalSeries::from_poly(&den, n);
    let prod = series
        .mul(&den_series)
        .expect("orders match by construction");
    let num = Poly::new(prod.coeffs()[..=max_num_deg].to_vec());
    let rf = RationalFunction::new(num, den);
    match rf.expand(n) {
        Ok(s) if s == *series => Ok(rf),
        _ => Err(ReconstructError::NotFound),
    }
}

/// One nonzero kernel vector of the matrix, or `None` when the kernel is
/// trivial. Deterministic: first free column set to 1.
fn nullspace_vector<F: CoeffField>(mut rows: Vec<Vec<F>>, ncols: usize) -> Option<Vec<F>> {
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; ncols];
    let mut rank = 0;
    for col in 0..ncols {
        let Some(r) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, r);
        let inv = rows[rank][col].try_inv().expect("nonzero field element is a unit");
        for c in 0..ncols {
            rows[rank][c] = rows[rank][c].mul(&inv);
        }
        for r2 in 0..rows.len() {
            if r2 != rank && !rows[r2][col].is_zero() {
                let f = rows[r2][col].clone();
                for c in 0..ncols {
                    let delta = rows[rank][c].mul(&f);
                    rows[r2][c] = rows[r2][c].sub(&delta);
                }
            }
        }
        pivot_of_col[col] = Some(rank);
        rank += 1;
    }
    let free = (0..ncols).find(|&c| pivot_of_col[c].is_none())?;
    let mut x = vec![F::zero(); ncols];
    x[free] = F::one();
    for col in 0..ncols {
        if let Some(r) = pivot_of_col[col] {
            x[col] = rows[r][free].neg();
        }
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{rat, ratio};

    fn qp(v: &[i64]) -> Poly<BigRational> {
        Poly::new(v.iter().map(|&c| rat(c)).collect())
    }

    #[test]
    fn canonical_reduction_and_equality() {
        // (1-t^2)/(1-t) reduces to 1+t
        let a = RationalFunction::new(qp(&[1, 0, -1]), qp(&[1, -1]));
        assert_eq!(a.num(), &qp(&[1, 1]));
        assert_eq!(a.den(), &qp(&[1]));
        // cross-multiplied equality sees through unreduced forms
        let b = RationalFunction {
            num: qp(&[2, 0, -2]),
            den: qp(&[2, -2]),
        };
        assert_eq!(a, b);
    }

    #[test]
    fn reconstruct_geometric_product() {
        // coefficients of 1/((1-t)(1-3t)) are (3^(n+1)-1)/2
        let n = 8;
        let coeffs: Vec<BigRational> = (0..=n as u32)
            .map(|k| ratio((3i64.pow(k + 1) - 1) / 2, 1))
            .collect();
        let s = RationalSeries::from_coeffs(coeffs);
        let rf = reconstruct(&s, 0, 2).unwrap();
        assert_eq!(rf.num(), &qp(&[1]));
        assert_eq!(rf.den(), &qp(&[1, -4, 3]));
    }

    #[test]
    fn reconstruct_with_nontrivial_numerator() {
        // (1+3t^2)/((1-t)(1-3t)), the zeta numerator convention for a curve
        let target = RationalFunction::new(qp(&[1, 0, 3]), qp(&[1, -4, 3]));
        let s = target.expand(9).unwrap();
        let rf = reconstruct(&s, 2, 2).unwrap();
        assert_eq!(rf, target);
        assert_eq!(rf.num(), &qp(&[1, 0, 3]));
    }

    #[test]
    fn reconstruct_needs_enough_order() {
        let s = RationalSeries::from_coeffs(vec![rat(1); 5]);
        assert_eq!(
            reconstruct(&s, 2, 2).unwrap_err(),
            ReconstructError::InsufficientOrder { need: 7, have: 4 }
        );
    }

    #[test]
    fn reconstruct_rejects_non_rational_series() {
        // factorials grow too fast for any rational function of low degree
        let coeffs: Vec<BigRational> = (0u64..=9)
            .map(|k| rat((1..=k.max(1)).product::<u64>() as i64))
            .collect();
        let s = RationalSeries::from_coeffs(coeffs);
        assert_eq!(reconstruct(&s, 2, 2).unwrap_err(), ReconstructError::NotFound);
    }

    #[test]
    fn subst_c_over_t_on_zeta_shape() {
        // Z(t) = 1/((1-t)(1-3t)) satisfies Z(1/(3t)) = 3*t^2*Z(t), the
        // genus-0 functional equation.
        let z = RationalFunction::new(qp(&[1]), qp(&[1, -4, 3]));
        let w = z.subst_c_over_t(&ratio(1, 3));
        let expected = z.mul(&RationalFunction::from_poly(Poly::new(vec![
            rat(0),
            rat(0),
            rat(3),
        ])));
        assert_eq!(w, expected);
    }

    #[test]
    fn expand_matches_known_series() {
        let rf = RationalFunction::new(qp(&[1]), qp(&[1, -1]));
        let s = rf.expand(5).unwrap();
        assert_eq!(s.coeffs(), &vec![rat(1); 6][..]);
    }
}
