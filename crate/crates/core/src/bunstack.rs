//! Special values of motivic zeta functions at the degrees of a semisimple
//! group, after Behrend–Dhillon, and Harder's mass formula for bundles on a
//! curve over a finite field.
//!
//! For a split semisimple group with invariant degrees d₁..d_r the expected
//! class of the bundle stack on a curve X of genus g is
//! 𝕃^{(g−1)·dim G} · ∏ᵢ Z_mot(X, 𝕃^{−dᵢ}); over a point this collapses to
//! [BG] = [G]⁻¹. The stack itself is never enumerated — the module computes
//! this product exactly in the localized ring and checks that its
//! specialization 𝕃 ↦ q agrees with the Harder-style count
//! q^{(g−1)(n²−1)} ∏₂ⁿ ζ_X(i) assembled directly from the Hasse–Weil zeta.

use crate::curvezeta::{count_curve, hasse_weil, CurveData, CurveError};
use crate::exactalg::{BigInt, BigRational};
use crate::k0ring::{builtin, class_bg_series, K0Element, K0Error, LInvSeries, RootDatumLite};
use crate::motzeta::{special_value, zeta_mot, KimuraObject, MotZeta, MotiveError};
use num::{One, Signed, Zero};
use thiserror::Error;

/// Expansion order in 𝕃⁻¹ attached to every computed value.
pub const DEFAULT_LINV_ORDER: usize = 12;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum BunError {
    #[error("{0}")]
    Ring(#[from] K0Error),
    #[error("{0}")]
    Motive(#[from] MotiveError),
    #[error("{0}")]
    Curve(#[from] CurveError),
    #[error("unsupported input: {0}")]
    Unsupported(String),
}

/// The special-value product for one group and one curve zeta, kept both
/// exactly and as a truncated expansion in 𝕃⁻¹.
#[derive(Clone)]
pub struct BunValue {
    group: RootDatumLite,
    zeta: MotZeta<K0Element>,
    genus: u32,
    exact: K0Element,
    series: LInvSeries,
}

impl std::fmt::Debug for BunValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("BunValue")
            .field("group", &self.group.name)
            .field("genus", &self.genus)
            .field("exact", &self.exact)
            .field("series", &format_args!("{}", self.series))
            .finish()
    }
}

impl BunValue {
    pub fn group(&self) -> &RootDatumLite {
        &self.group
    }

    pub fn zeta(&self) -> &MotZeta<K0Element> {
        &self.zeta
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn exact(&self) -> &K0Element {
        &self.exact
    }

    pub fn series(&self) -> &LInvSeries {
        &self.series
    }

    /// Exact evaluation at 𝕃 = q.
    pub fn specialize_int(&self, q: i64) -> Result<BigRational, K0Error> {
        self.exact.specialize_int(q)
    }
}

/// 𝕃^{(g−1)·dim G} · ∏ᵢ Z_mot(X, 𝕃^{−dᵢ}) for the degrees dᵢ of `rd`.
///
/// The zeta function must have poles only at t = 1 and t = 𝕃⁻¹ (the curve
/// case); each factor is then pole-free because every degree is at least 2.
pub fn bun_rhs(
    rd: &RootDatumLite,
    z: &MotZeta<K0Element>,
    genus: u32,
) -> Result<BunValue, BunError> {
    rd.validate()?;
    for (&m, a) in z.plus_part().terms() {
        if a.is_positive() && m != 0 && m != 1 {
            return Err(BunError::Unsupported(format!(
                "zeta function has a pole at t = L^-{m}"
            )));
        }
    }
    let mut exact = K0Element::l_pow_class((i64::from(genus) - 1) * rd.dim as i64);
    for &d in &rd.degrees {
        exact = exact.mul(&special_value(z, d)?);
    }
    let series = exact.expand_l_inverse(DEFAULT_LINV_ORDER);
    Ok(BunValue {
        group: rd.clone(),
        zeta: z.clone(),
        genus,
        exact,
        series,
    })
}

/// [BG] assembled through the special-value product over a point:
/// 𝕃^{−dim G} · ∏ᵢ (1 − 𝕃^{−dᵢ})⁻¹. Compare with the direct inversion
/// of the group class.
pub fn bg_from_bun(rd: &RootDatumLite, order: usize) -> Result<LInvSeries, BunError> {
    let point = zeta_mot(&KimuraObject::<K0Element>::unit(), 2);
    Ok(bun_rhs(rd, &point, 0)?.exact().expand_l_inverse(order))
}

/// The Kimura motive of a genus ≤ 1 curve, recovered from one point count.
pub fn curve_motive(c: &CurveData) -> Result<KimuraObject<K0Element>, BunError> {
    match c.genus() {
        0 => Ok(KimuraObject::projective_space(1)),
        1 => {
            let n1 = count_curve(c, 1)?;
            let a = c.p() as i64 + 1 - n1 as i64;
            Ok(KimuraObject::elliptic(K0Element::from_int(a)))
        }
        g => Err(BunError::Unsupported(format!(
            "genus {g} curve has no bundled motive"
        ))),
    }
}

/// One Harder-style mass: q^{(g−1)(n²−1)} ∏_{i=2}^n ζ_X(i), exactly.
#[derive(Debug, Clone, PartialEq)]
pub struct HarderValue {
    pub q: u64,
    pub n: u32,
    pub genus: u32,
    pub value: BigRational,
}

/// Outcome of comparing the two routes to the mass.
#[derive(Debug, Clone, PartialEq)]
pub enum HarderCheck {
    Holds(HarderValue),
    Fails {
        direct: BigRational,
        specialized: BigRational,
    },
}

impl HarderCheck {
    pub fn holds(&self) -> bool {
        matches!(self, HarderCheck::Holds(_))
    }
}

fn q_pow(q: u64, e: i64) -> BigRational {
    let b = BigRational::from_integer(BigInt::from(q));
    let mut acc = BigRational::one();
    for _ in 0..e.unsigned_abs() {
        acc *= b.clone();
    }
    if e < 0 {
        acc.recip()
    } else {
        acc
    }
}

/// Computes the SLₙ mass on a genus ≤ 1 curve two ways — directly from the
/// Hasse–Weil zeta values ζ_X(i) = Z(X, q^{−i}), and by specializing the
/// motivic special-value product at 𝕃 = q — and compares them exactly.
pub fn harder_check(c: &CurveData, n: u32) -> Result<HarderCheck, BunError> {
    if !(2..=4).contains(&n) {
        return Err(BunError::Unsupported(format!(
            "only SL_n with 2 <= n <= 4 is bundled, got n = {n}"
        )));
    }
    let g = c.genus();
    let q = c.p();
    let dim = (n * n - 1) as i64;
    let zeta = hasse_weil(c)?;
    let mut direct = q_pow(q, (i64::from(g) - 1) * dim);
    for i in 2..=n {
        let at = q_pow(q, -i64::from(i));
        let value = zeta
            .rational()
            .eval(&at)
            .expect("zeta has no pole at q^-i for i >= 2");
        direct *= value;
    }
    let rd = builtin(&format!("SL{n}")).expect("bundled root datum");
    let z = zeta_mot(&curve_motive(c)?, DEFAULT_LINV_ORDER);
    let specialized = bun_rhs(&rd, &z, g)?.specialize_int(q as i64)?;
    if direct == specialized {
        Ok(HarderCheck::Holds(HarderValue {
            q,
            n,
            genus: g,
            value: direct,
        }))
    } else {
        Ok(HarderCheck::Fails {
            direct,
            specialized,
        })
    }
}

/// ∏ᵢ (q^{dᵢ} − 1)(q^{dᵢ−1} − 1) · q^{dim G}: a universal denominator
/// bound for masses. Each zeta value ζ_X(i) contributes denominator factors
/// (q^i − 1) and (q^{i−1} − 1) from (1 − q^{−i})(1 − q^{1−i}); the power of
/// q absorbs the genus-0 prefactor.
pub fn mass_denominator_bound(rd: &RootDatumLite, q: u64) -> BigInt {
    let qb = BigInt::from(q);
    let mut acc = num::pow::pow(qb.clone(), rd.dim);
    for &d in &rd.degrees {
        acc *= num::pow::pow(qb.clone(), d as usize) - BigInt::one();
        acc *= num::pow::pow(qb.clone(), d as usize - 1) - BigInt::one();
    }
    acc
}
