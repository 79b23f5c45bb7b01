//! Symmetric-power operations on virtual sums of Lefschetz powers: the
//! zeta series attached to a mixed-Tate class, with its exact product form.

use super::k0::{K0Element, K0Error};
use super::mixed_tate::MixedTateClass;
use crate::exactalg::{BigInt, BigRational, RationalSeries};
use num::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// The zeta series of a mixed-Tate class `sum a_m L^m`: a truncated series
/// together with its exact rational form `prod (1 - L^m t)^(-a_m)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SigmaZeta {
    pub series: RationalSeries<K0Element>,
    /// `m -> a_m`, each contributing a factor `(1 - L^m t)^(-a_m)`.
    pub factors: BTreeMap<i64, BigInt>,
}

/// Expands `sigma_t` of a class to the requested order. Each `L^m` term
/// contributes a geometric factor `1/(1 - L^m t)`; the operation is
/// multiplicative over the virtual sum, so negative multiplicities become
/// polynomial factors.
pub fn sigma_t(c: &MixedTateClass, order: usize) -> SigmaZeta {
    let mut series = RationalSeries::<K0Element>::one(order);
    for (&m, a) in c.terms() {
        let geometric = RationalSeries::from_coeffs(
            (0..=order as i64)
                .map(|k| K0Element::l_pow_class(m * k))
                .collect(),
        );
        let factor = if a.is_negative() {
            // (1 - L^m t) itself
            geometric.inv().expect("unit constant term")
        } else {
            geometric
        };
        let mut reps = a.abs();
        while !reps.is_zero() {
            series = series.mul(&factor).expect("orders match");
            reps -= 1;
        }
    }
    SigmaZeta {
        series,
        factors: c.terms().clone(),
    }
}

impl SigmaZeta {
    /// Evaluates `L -> q` coefficientwise.
    pub fn specialize(&self, q: &BigRational) -> Result<RationalSeries<BigRational>, K0Error> {
        let mut out = Vec::with_capacity(self.series.order() + 1);
        for c in self.series.coeffs() {
            out.push(c.specialize(q)?);
        }
        Ok(RationalSeries::from_coeffs(out))
    }

    /// The exact product form, e.g. `1 / ((1 - t)*(1 - L*t))`.
    pub fn factored_form(&self) -> String {
        let part = |sign_negative: bool| -> Vec<String> {
            let mut parts = Vec::new();
            for (&m, a) in &self.factors {
                if a.is_negative() != sign_negative || a.is_zero() {
                    continue;
                }
                let l_part = match m {
                    0 => String::new(),
                    1 => "L*".into(),
                    m => format!("L^{m}*"),
                };
                let base = format!("(1 - {l_part}t)");
                let e = a.abs();
                if e.is_one() {
                    parts.push(base);
                } else {
                    parts.push(format!("{base}^{e}"));
                }
            }
            parts
        };
        let group = |parts: Vec<String>| -> String {
            if parts.len() == 1 {
                parts.into_iter().next().expect("nonempty")
            } else {
                format!("({})", parts.join("*"))
            }
        };
        let num = part(true);
        let den = part(false);
        match (num.is_empty(), den.is_empty()) {
            (true, true) => "1".into(),
            (false, true) => group(num),
            (true, false) => format!("1 / {}", group(den)),
            (false, false) => format!("{} / {}", group(num), group(den)),
        }
    }
}

impl fmt::Display for SigmaZeta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.factored_form())
    }
}

/// MacDonald's formula: the zeta series of a constant class `chi * 1` is
/// `(1 - t)^(-chi)`.
pub fn macdonald_series(chi: i64, order: usize) -> RationalSeries<K0Element> {
    sigma_t(&MixedTateClass::from_pairs(&[(0, chi)]), order).series
}
