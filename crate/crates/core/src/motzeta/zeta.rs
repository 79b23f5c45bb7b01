//! Zeta functions of Kimura-finite objects.
//!
//! Z(M, t) = Σ [SⁿM] tⁿ is rational: the even part contributes the factored
//! denominator ∏(1 − 𝕃^m t)^{aₘ} and each odd generator contributes its
//! zeta polynomial to the numerator. Working at the level of motive classes
//! is what makes this rational in the first place — over the variety ring
//! itself, Larsen–Lunts showed the Kapranov series of a general surface is
//! not rational — and the construction is multiplicative over direct sums
//! by design.

use super::kimura::{K0Coeff, KimuraObject, MotiveError};
use crate::exactalg::{BigRational, Poly, RationalFunction, RationalSeries};
use crate::k0ring::{sigma_t, K0Element, K0Error, MixedTateClass};
use num::Signed;

/// The zeta of a Kimura-finite object: exact factored form plus a series
/// expansion.
#[derive(Clone, PartialEq)]
pub struct MotZeta<R: K0Coeff> {
    numerator: Poly<R>,
    plus: MixedTateClass,
    series: RationalSeries<R>,
}

impl<R: K0Coeff> std::fmt::Debug for MotZeta<R> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("MotZeta")
            .field("numerator", &self.numerator.coeffs())
            .field("plus", &self.plus)
            .field("series", &self.series.coeffs())
            .finish()
    }
}

/// Expands the zeta of `m` to the requested order.
pub fn zeta_mot<R: K0Coeff>(m: &KimuraObject<R>, order: usize) -> MotZeta<R> {
    let even = sigma_t(m.plus(), order);
    let mut series = even.series.map(|c| R::embed(c.clone()));
    let mut numerator = Poly::<R>::one();
    for g in m.odd() {
        numerator = numerator.mul(g.numerator());
    }
    series = series
        .mul(&RationalSeries::from_poly(&numerator, order))
        .expect("orders match");
    MotZeta {
        numerator,
        plus: m.plus().clone(),
        series,
    }
}

/// 1 − 𝕃^m t with coefficients embedded into R.
fn linear_factor<R: K0Coeff>(m: i64) -> Poly<R> {
    Poly::new(vec![
        R::one(),
        R::embed(K0Element::l_pow_class(m)).neg(),
    ])
}

impl<R: K0Coeff> MotZeta<R> {
    /// Product of the odd generators' zeta polynomials.
    pub fn numerator(&self) -> &Poly<R> {
        &self.numerator
    }

    /// Exponents of the denominator factors: m ↦ aₘ for (1 − 𝕃^m t)^{aₘ}.
    pub fn plus_part(&self) -> &MixedTateClass {
        &self.plus
    }

    /// Series expansion: the t^n coefficient is [SⁿM].
    pub fn series(&self) -> &RationalSeries<R> {
        &self.series
    }

    pub fn coefficient(&self, n: usize) -> R {
        self.series.coeff(n)
    }

    /// The exact rational form; negative even multiplicities move their
    /// factors into the numerator.
    pub fn rational(&self) -> RationalFunction<R> {
        let mut num = self.numerator.clone();
        let mut den = Poly::<R>::one();
        for (&m, a) in self.plus.terms() {
            let factor = linear_factor::<R>(m);
            let e = i64::try_from(a.abs()).expect("multiplicity fits i64");
            for _ in 0..e {
                if a.is_positive() {
                    den = den.mul(&factor);
                } else {
                    num = num.mul(&factor);
                }
            }
        }
        RationalFunction::new(num, den)
    }

    /// Human-readable factored form, e.g.
    /// `(1 + L*t^2) / ((1 - t)*(1 - L*t))`.
    pub fn display_factored(&self) -> String
    where
        R: std::fmt::Display,
    {
        let mut den_parts = Vec::new();
        let mut num_parts = Vec::new();
        for (&m, a) in self.plus.terms() {
            let base = match m {
                0 => "1 - t".to_string(),
                1 => "1 - L*t".to_string(),
                k => format!("1 - L^{k}*t"),
            };
            let e = i64::try_from(a.abs()).expect("multiplicity fits i64");
            let part = if e == 1 {
                format!("({base})")
            } else {
                format!("({base})^{e}")
            };
            if a.is_positive() {
                den_parts.push(part);
            } else {
                num_parts.push(part);
            }
        }
        let mut num = if self.numerator == Poly::one() {
            String::new()
        } else {
            format!("({})", self.numerator.display("t"))
        };
        for p in num_parts {
            if !num.is_empty() {
                num.push('*');
            }
            num.push_str(&p);
        }
        if num.is_empty() {
            num = "1".to_string();
        }
        match den_parts.len() {
            0 => num,
            1 => format!("{num} / {}", den_parts[0]),
            _ => format!("{num} / ({})", den_parts.join("*")),
        }
    }
}

impl MotZeta<K0Element> {
    /// Specializes 𝕃 to a number, recovering a point-count zeta.
    pub fn specialize(&self, q: &BigRational) -> Result<RationalFunction<BigRational>, K0Error> {
        let num = map_poly(&self.numerator, q)?;
        let den = map_poly(&self.rational_den(), q)?;
        Ok(RationalFunction::new(num, den))
    }

    fn rational_den(&self) -> Poly<K0Element> {
        let r = self.rational();
        r.den().clone()
    }
}

fn map_poly(p: &Poly<K0Element>, q: &BigRational) -> Result<Poly<BigRational>, K0Error> {
    let mut coeffs = Vec::with_capacity(p.coeffs().len());
    for c in p.coeffs() {
        coeffs.push(c.specialize(q)?);
    }
    Ok(Poly::new(coeffs))
}

/// Exact evaluation at t = 𝕃^{-d}. Poles sit exactly at the Lefschetz
/// exponents of the even part (t = 1 is d = 0).
pub fn special_value(z: &MotZeta<K0Element>, d: u32) -> Result<K0Element, MotiveError> {
    if let Some(a) = z.plus_part().terms().get(&(d as i64)) {
        if a.is_positive() {
            return Err(MotiveError::Pole(d));
        }
    }
    let t = K0Element::l_pow_class(-(d as i64));
    let mut value = z.numerator().eval(&t);
    for (&m, a) in z.plus_part().terms() {
        let base = K0Element::one().sub(&K0Element::l_pow_class(m - d as i64));
        let e = i64::try_from(-a).expect("multiplicity fits i64");
        value = value.mul(
            &base
                .powi(e)
                .map_err(|err| MotiveError::Invalid(err.to_string()))?,
        );
    }
    Ok(value)
}

/// Outcome of the motivic functional-equation check.
#[derive(Clone, PartialEq)]
pub enum KahnCheck<R: K0Coeff> {
    Holds,
    Fails { residual: RationalFunction<R> },
}

impl<R: K0Coeff> std::fmt::Debug for KahnCheck<R> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            KahnCheck::Holds => write!(f, "Holds"),
            KahnCheck::Fails { residual } => f
                .debug_struct("Fails")
                .field("residual_num", &residual.num().coeffs())
                .field("residual_den", &residual.den().coeffs())
                .finish(),
        }
    }
}

impl<R: K0Coeff> KahnCheck<R> {
    pub fn holds(&self) -> bool {
        matches!(self, KahnCheck::Holds)
    }
}

/// Verifies Z(M^∨, t^{-1}) = (−1)^{χ₊} · det M · t^χ · Z(M, t) as exact
/// rational functions; a failure returns the nonzero residual of the
/// difference.
pub fn kahn_check<R: K0Coeff>(m: &KimuraObject<R>) -> KahnCheck<R> {
    let order = 2; // the series is irrelevant here; only the exact form is used
    let z = zeta_mot(m, order).rational();
    let z_dual = zeta_mot(&m.dual(), order).rational();
    let lhs = z_dual.subst_c_over_t(&R::one());
    let sign_is_negative = num::Integer::is_odd(&m.chi_plus());
    let det = R::embed(m.det_class());
    let chi = i64::try_from(m.chi()).expect("characteristic fits i64");
    let mut rhs = z.scale(&det);
    if sign_is_negative {
        rhs = rhs.neg();
    }
    let shift = RationalFunction::from_poly(Poly::monomial(R::one(), chi.unsigned_abs() as usize));
    rhs = if chi >= 0 {
        rhs.mul(&shift)
    } else {
        rhs.div(&shift)
    };
    let residual = lhs.sub(&rhs);
    if residual.is_zero() {
        KahnCheck::Holds
    } else {
        KahnCheck::Fails { residual }
    }
}
