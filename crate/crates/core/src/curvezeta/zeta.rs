//! Hasse–Weil zeta functions of curves from point counts.
//!
//! The numerator P(t) of degree 2g is solved from N₁..N_g alone: the power
//! sums of the inverse roots are sₙ = qⁿ + 1 − Nₙ, Newton's identities give
//! the first g coefficients, and the functional-equation symmetry
//! a_{2g−i} = q^{g−i} aᵢ supplies the rest. The resulting zeta is then made
//! to predict N_{g+1}..N_{2g}, which are verified by independent brute-force
//! counts.

use super::curve::{count_curve, CurveData, CurveError};
use crate::exactalg::{rat, BigInt, BigRational, Poly, RationalFunction, RationalSeries};
use serde::{Deserialize, Serialize};

/// A verified zeta function: Z(t) = P(t) / ((1−t)(1−qt)).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZetaData {
    pub q: u64,
    pub genus: u32,
    /// N₁..N_{2g} (just N₁ for genus 0); all entries brute-force verified.
    pub counts: Vec<u64>,
    /// P(t), integer coefficients, degree 2g, constant term 1.
    pub numerator: Poly<BigInt>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct ZetaFile {
    #[serde(rename = "P")]
    p: Vec<i64>,
    q: u64,
    counts: Vec<u64>,
}

impl ZetaData {
    pub fn to_json_string(&self) -> String {
        let file = ZetaFile {
            p: self
                .numerator
                .coeffs()
                .iter()
                .map(|c| i64::try_from(c).expect("numerator coefficients fit i64"))
                .collect(),
            q: self.q,
            counts: self.counts.clone(),
        };
        serde_json::to_string(&file).expect("zeta serialization cannot fail")
    }

    /// Z(t) as an exact rational function with rational coefficients.
    pub fn rational(&self) -> RationalFunction<BigRational> {
        let num = self.numerator.map(|c| BigRational::from_integer(c.clone()));
        let den = Poly::new(vec![rat(1), rat(-1)])
            .mul(&Poly::new(vec![rat(1), rat(-(self.q as i64))]));
        RationalFunction::new(num, den)
    }
}

/// Counts the curve over 𝔽_{q^n} for n = 1..=max_n, one task per degree.
fn counts_up_to(c: &CurveData, max_n: u32) -> Result<Vec<u64>, CurveError> {
    std::thread::scope(|s| {
        let handles: Vec<_> = (1..=max_n)
            .map(|n| s.spawn(move || count_curve(c, n)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("counting task panicked"))
            .collect()
    })
}

/// Computes and verifies the Hasse–Weil zeta of a curve of genus ≤ 2.
pub fn hasse_weil(c: &CurveData) -> Result<ZetaData, CurveError> {
    let g = c.genus();
    if g > 2 {
        return Err(CurveError::UnsupportedGenus(g));
    }
    let q = c.p() as i128;
    let counts = counts_up_to(c, (2 * g).max(1))?;
    let n1 = counts[0];
    // Hasse bound |q + 1 - N1| <= 2g sqrt(q), squared to stay integral.
    let defect = q + 1 - n1 as i128;
    if defect * defect > 4 * (g as i128) * (g as i128) * q {
        return Err(CurveError::HasseBound {
            n1,
            q: c.p(),
            g,
        });
    }
    let mut a = vec![0i128; 2 * g as usize + 1];
    a[0] = 1;
    // Power sums of the inverse roots from the counts actually used.
    let mut s = vec![0i128; 2 * g as usize + 1];
    for n in 1..=g as usize {
        s[n] = q.pow(n as u32) + 1 - counts[n - 1] as i128;
    }
    // Newton's identities: s_n + sum_{j<n} a_j s_{n-j} + n a_n = 0.
    for n in 1..=g as usize {
        let mut acc = s[n];
        for j in 1..n {
            acc += a[j] * s[n - j];
        }
        if acc % n as i128 != 0 {
            return Err(CurveError::NonIntegralSolution);
        }
        a[n] = -acc / n as i128;
    }
    // Functional-equation symmetry fills the upper half.
    for i in 0..g as usize {
        a[2 * g as usize - i] = q.pow(g - i as u32) * a[i];
    }
    // Extend the power sums and verify the predicted counts by brute force.
    for n in g as usize + 1..=2 * g as usize {
        let mut acc = n as i128 * a[n];
        for j in 1..n {
            acc += a[j] * s[n - j];
        }
        s[n] = -acc;
        let predicted = q.pow(n as u32) + 1 - s[n];
        let actual = counts[n - 1];
        if predicted != actual as i128 {
            return Err(CurveError::CountMismatch {
                degree: n as u32,
                predicted,
                actual,
            });
        }
    }
    Ok(ZetaData {
        q: c.p(),
        genus: g,
        counts,
        numerator: Poly::new(a.iter().map(|&v| BigInt::from(v)).collect()),
    })
}

/// Outcome of the functional-equation check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FeCheck {
    Holds,
    Fails(String),
}

impl FeCheck {
    pub fn holds(&self) -> bool {
        matches!(self, FeCheck::Holds)
    }
}

impl std::fmt::Display for FeCheck {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FeCheck::Holds => write!(f, "holds"),
            FeCheck::Fails(why) => write!(f, "fails: {why}"),
        }
    }
}

/// Verifies Z(t) = q^{g−1} t^{2g−2} Z(1/(qt)) as exact rational functions,
/// and that every stored count agrees with the numerator's prediction (a
/// tampered coefficient can keep the t ↦ 1/(qt) symmetry yet contradict the
/// counts, so both halves are needed to certify the data).
pub fn functional_equation_check(z: &ZetaData) -> FeCheck {
    let zt = z.rational();
    let g = z.genus as usize;
    let one_over_q = BigRational::new(BigInt::from(1), BigInt::from(z.q));
    let sub = zt.subst_c_over_t(&one_over_q);
    let rhs = if g >= 1 {
        let qg = BigRational::from_integer(num::pow::pow(BigInt::from(z.q), g - 1));
        sub.mul(&RationalFunction::from_poly(Poly::monomial(qg, 2 * g - 2)))
    } else {
        sub.div(&RationalFunction::from_poly(Poly::monomial(
            rat(z.q as i64),
            2,
        )))
    };
    if zt != rhs {
        return FeCheck::Fails("t -> 1/(qt) symmetry is broken".into());
    }
    let predicted = expected_counts(z, z.counts.len() as u32);
    for (n, (&actual, pred)) in z.counts.iter().zip(&predicted).enumerate() {
        if BigInt::from(actual) != *pred {
            return FeCheck::Fails(format!(
                "stored N_{} = {} but the numerator predicts {}",
                n + 1,
                actual,
                pred
            ));
        }
    }
    FeCheck::Holds
}

/// N₁..N_m as predicted by the numerator, via the power-sum recurrence.
pub fn expected_counts(z: &ZetaData, m: u32) -> Vec<BigInt> {
    let a = z.numerator.coeffs();
    let deg = z.numerator.degree().unwrap_or(0);
    let q = BigInt::from(z.q);
    let mut s: Vec<BigInt> = vec![BigInt::from(0); m as usize + 1];
    let mut out = Vec::with_capacity(m as usize);
    for n in 1..=m as usize {
        let mut acc = if n <= deg {
            BigInt::from(n as i64) * a[n].clone()
        } else {
            BigInt::from(0)
        };
        for j in 1..n.min(deg + 1) {
            acc += a[j].clone() * s[n - j].clone();
        }
        s[n] = -acc;
        out.push(q.pow(n as u32) + 1 - s[n].clone());
    }
    out
}

/// exp(Σ Nₙ tⁿ/n): the generating series of symmetric-power point counts.
pub fn zeta_series_from_counts(counts: &[u64]) -> RationalSeries<BigRational> {
    let order = counts.len();
    let mut c = vec![rat(0); order + 1];
    for (n, &v) in counts.iter().enumerate() {
        c[n + 1] = BigRational::new(BigInt::from(v), BigInt::from(n as i64 + 1));
    }
    RationalSeries::from_coeffs(c)
        .exp()
        .expect("constant term is zero by construction")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn elliptic_a0() -> CurveData {
        CurveData::hyperelliptic(3, &[0, -1, 0, 1]).unwrap()
    }

    #[test]
    fn projective_line_zeta() {
        let c = CurveData::projective_line(3).unwrap();
        let z = hasse_weil(&c).unwrap();
        assert_eq!(z.numerator, Poly::new(vec![BigInt::from(1)]));
        assert_eq!(z.counts, vec![4]);
        assert!(functional_equation_check(&z).holds());
        // Z = 1/((1-t)(1-3t)) expands to (3^{n+1}-1)/2.
        let series = z.rational().expand(4).unwrap();
        assert_eq!(
            (0..=4).map(|i| series.coeff(i)).collect::<Vec<_>>(),
            vec![rat(1), rat(4), rat(13), rat(40), rat(121)]
        );
    }

    #[test]
    fn supersingular_elliptic_over_f3() {
        let z = hasse_weil(&elliptic_a0()).unwrap();
        assert_eq!(
            z.numerator,
            Poly::new(vec![BigInt::from(1), BigInt::from(0), BigInt::from(3)])
        );
        assert_eq!(z.counts, vec![4, 16]);
        assert!(functional_equation_check(&z).holds());
        assert_eq!(
            z.to_json_string(),
            r#"{"P":[1,0,3],"q":3,"counts":[4,16]}"#
        );
    }

    #[test]
    fn ordinary_curves_and_quartic_models() {
        // y² = x³ - x + 1 over F3: N1 = 7, so P = 1 + 3t + 3t² and N2 = 7.
        let c = CurveData::hyperelliptic(3, &[1, -1, 0, 1]).unwrap();
        let z = hasse_weil(&c).unwrap();
        assert_eq!(
            z.numerator.coeffs(),
            &[BigInt::from(1), BigInt::from(3), BigInt::from(3)]
        );
        assert_eq!(z.counts, vec![7, 7]);
        // The quartic model y² = x⁴ + x + 1 over F3 has the same zeta.
        let c4 = CurveData::hyperelliptic(3, &[1, 1, 0, 0, 1]).unwrap();
        assert_eq!(hasse_weil(&c4).unwrap().numerator, z.numerator);
        // Two elliptic curves over F5.
        let e1 = hasse_weil(&CurveData::hyperelliptic(5, &[0, 1, 0, 1]).unwrap()).unwrap();
        assert_eq!(
            e1.numerator.coeffs(),
            &[BigInt::from(1), BigInt::from(-2), BigInt::from(5)]
        );
        let e2 = hasse_weil(&CurveData::hyperelliptic(5, &[1, 1, 0, 1]).unwrap()).unwrap();
        assert_eq!(
            e2.numerator.coeffs(),
            &[BigInt::from(1), BigInt::from(3), BigInt::from(5)]
        );
        for z in [&e1, &e2] {
            assert!(functional_equation_check(z).holds());
        }
    }

    #[test]
    fn fermat_cubic_zeta() {
        let c = CurveData::plane(2, &[((3, 0, 0), 1), ((0, 3, 0), 1), ((0, 0, 3), 1)]).unwrap();
        let z = hasse_weil(&c).unwrap();
        assert_eq!(
            z.numerator.coeffs(),
            &[BigInt::from(1), BigInt::from(0), BigInt::from(2)]
        );
        assert_eq!(z.counts, vec![3, 9]);
    }

    #[test]
    fn tampered_numerators_fail_the_check() {
        let mut z = hasse_weil(&elliptic_a0()).unwrap();
        z.numerator = Poly::new(vec![BigInt::from(1), BigInt::from(1), BigInt::from(3)]);
        let verdict = functional_equation_check(&z);
        assert!(!verdict.holds());
        // Breaking the t -> 1/(qt) symmetry itself is also caught.
        z.numerator = Poly::new(vec![BigInt::from(1), BigInt::from(0), BigInt::from(5)]);
        assert_eq!(
            functional_equation_check(&z),
            FeCheck::Fails("t -> 1/(qt) symmetry is broken".into())
        );
    }

    #[test]
    fn expected_counts_extend_the_verified_ones() {
        let z = hasse_weil(&elliptic_a0()).unwrap();
        // alpha = i*sqrt(3): N_n = 3^n + 1 - 2*Re(alpha^n)
        assert_eq!(
            expected_counts(&z, 6),
            vec![4, 16, 28, 64, 244, 784]
                .into_iter()
                .map(BigInt::from)
                .collect::<Vec<_>>()
        );
    }

    #[test]
    fn exp_log_consistency() {
        // exp(sum N_n t^n / n) must match the expansion of P/((1-t)(1-qt)).
        let z = hasse_weil(&elliptic_a0()).unwrap();
        let m = (2 * z.genus + 2) as usize;
        let counts: Vec<u64> = expected_counts(&z, m as u32)
            .iter()
            .map(|n| u64::try_from(n).unwrap())
            .collect();
        let series = zeta_series_from_counts(&counts);
        let direct = z
            .rational()
            .expand(m)
            .unwrap();
        assert_eq!(series, direct);
    }

    #[test]
    fn disjoint_union_multiplies_zetas() {
        // A disjoint pair of lines has N_n = 2(3^n + 1); its zeta series is
        // the square of the single-line zeta.
        let line = hasse_weil(&CurveData::projective_line(3).unwrap()).unwrap();
        let m = 6usize;
        let single: Vec<u64> = expected_counts(&line, m as u32)
            .iter()
            .map(|n| u64::try_from(n).unwrap())
            .collect();
        let double: Vec<u64> = single.iter().map(|n| 2 * n).collect();
        let z1 = zeta_series_from_counts(&single);
        assert_eq!(
            zeta_series_from_counts(&double),
            z1.mul(&z1).unwrap()
        );
    }

    #[test]
    fn degenerate_models_trip_the_sanity_gates() {
        // XYZ = 0 is a homogeneous cubic but a union of three lines: its 6
        // points over F2 overshoot the genus-1 Hasse bound 3 + 2*sqrt(2).
        let lines = CurveData::plane(2, &[((1, 1, 1), 1)]).unwrap();
        assert_eq!(count_curve(&lines, 1).unwrap(), 6);
        assert_eq!(
            hasse_weil(&lines),
            Err(CurveError::HasseBound { n1: 6, q: 2, g: 1 })
        );
        // The cuspidal cubic Y²Z = X³ has N1 = q + 1 (within the bound) but
        // N2 = q² + 1 contradicts the smooth-curve prediction q² + 2q + 1.
        let cusp = CurveData::plane(5, &[((0, 2, 1), 1), ((3, 0, 0), -1)]).unwrap();
        assert_eq!(count_curve(&cusp, 1).unwrap(), 6);
        assert_eq!(
            hasse_weil(&cusp),
            Err(CurveError::CountMismatch {
                degree: 2,
                predicted: 36,
                actual: 26,
            })
        );
    }
}
