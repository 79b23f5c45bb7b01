//! L-series from fixed points of twisted Frobenius.
//!
//! The building block is ♯Fix(gFⁿ). On ℙ¹ the twisted fixed-point equation
//! c·x^{qⁿ+1} + d·x − a·x^{qⁿ} − b = 0 (plus the point at infinity when
//! c = 0) is separable of total degree qⁿ + 1 whenever ad − bc ≠ 0, so the
//! count is exactly qⁿ + 1 for every map; a brute-force kernel cross-checks
//! this on small fields. On a hyperelliptic model the solutions live in
//! 𝔽_{q^{n·ord(g)}} and are enumerated there, with the y-fibre decided by
//! the Euler criterion f(x)^{(qⁿ−1)/2} = τ⁻¹.

use super::action::{ActionData, Automorphism};
use super::chartab::{
    add_class_functions, induced_character, inflated_character, ArtinError, QuotientData,
    SubgroupData,
};
use crate::budget;
use crate::curvezeta::{
    count_curve, field_make, zeta_series_from_counts, CurveModel, FiniteField, FqElem,
};
use crate::exactalg::{rat, BigInt, BigRational, RationalSeries};

/// ♯Fix(gFⁿ): points of the curve over the algebraic closure fixed by the
/// automorphism of `g` composed with the n-th power of Frobenius.
pub fn fix_count(a: &ActionData, g: usize, n: u32) -> Result<u64, ArtinError> {
    if g >= a.group().order() {
        return Err(ArtinError::BadAction(format!("no group element {g}")));
    }
    if n == 0 {
        return Err(ArtinError::BadAction(
            "the Frobenius power must be positive".into(),
        ));
    }
    let p = a.curve().p();
    let qn = (p as u128).checked_pow(n).unwrap_or(u128::MAX);
    budget::check(qn)?;
    match *a.map(g) {
        Automorphism::Moebius { .. } => Ok(qn as u64 + 1),
        Automorphism::HyperellMap { alpha, beta, tau } => fix_hyperell(a, alpha, beta, tau, g, n),
    }
}

fn frobenius_power(field: &FiniteField, x: &FqElem, n: u32) -> FqElem {
    let mut out = x.clone();
    for _ in 0..n {
        out = field.frobenius(&out);
    }
    out
}

fn fix_hyperell(a: &ActionData, alpha: u64, beta: u64, tau: u64, g: usize, n: u32) -> Result<u64, ArtinError> {
    let p = a.curve().p();
    let m = a.group().element_order(g);
    let field = field_make(p, n as usize * m)?;
    let f = match a.curve().model() {
        CurveModel::Hyperelliptic { f } => f,
        _ => unreachable!("validated at construction"),
    };
    let fq: Vec<_> = f.iter().map(|&c| field.from_u64(c)).collect();
    let qn = (p as u128).pow(n);
    let s = (qn - 1) / 2;
    let alpha_e = field.from_u64(alpha);
    let beta_e = field.from_u64(beta);
    let tau_inv = field.inv(&field.from_u64(tau));
    let mut count = 0u64;
    for x in field.elements() {
        let sigma_x = field.add(&field.mul(&alpha_e, &frobenius_power(&field, &x, n)), &beta_e);
        if sigma_x != x {
            continue;
        }
        let fx = field.eval_poly(&fq, &x);
        if field.is_zero(&fx) {
            count += 1;
        } else if field.pow(&fx, s) == tau_inv {
            count += 2;
        }
    }
    if f.len() - 1 == 3 {
        // one point at infinity, rational and fixed by every (αx+β, τy)
        count += 1;
    } else {
        // two points with w² = lc(f); fixed iff w^{qⁿ−1} = α²/τ
        let lc = field.from_u64(*f.last().expect("nonzero polynomial"));
        let target = field.mul(&field.mul(&alpha_e, &alpha_e), &tau_inv);
        if field.pow(&lc, s) == target {
            count += 2;
        }
    }
    Ok(count)
}

/// Literal enumeration of fixed points inside 𝔽_{q^{n·ord(g)}}; the
/// independent oracle for `fix_count` on small inputs.
pub fn fix_count_brute(a: &ActionData, g: usize, n: u32) -> Result<u64, ArtinError> {
    if n == 0 {
        return Err(ArtinError::BadAction(
            "the Frobenius power must be positive".into(),
        ));
    }
    let p = a.curve().p();
    let m = a.group().element_order(g);
    let field = field_make(p, n as usize * m)?;
    match *a.map(g) {
        Automorphism::Moebius { a: ma, b, c, d } => {
            let (ea, eb, ec, ed) = (
                field.from_u64(ma),
                field.from_u64(b),
                field.from_u64(c),
                field.from_u64(d),
            );
            let mut count = if c == 0 { 1 } else { 0 };
            for x in field.elements() {
                let xx = frobenius_power(&field, &x, n);
                let den = field.add(&field.mul(&ec, &xx), &ed);
                if field.is_zero(&den) {
                    continue; // image is the point at infinity
                }
                let num = field.add(&field.mul(&ea, &xx), &eb);
                if num == field.mul(&x, &den) {
                    count += 1;
                }
            }
            Ok(count)
        }
        Automorphism::HyperellMap { alpha, beta, tau } => {
            let f = match a.curve().model() {
                CurveModel::Hyperelliptic { f } => f,
                _ => unreachable!("validated at construction"),
            };
            let fq: Vec<_> = f.iter().map(|&c| field.from_u64(c)).collect();
            let all: Vec<_> = field.elements().collect();
            let alpha_e = field.from_u64(alpha);
            let beta_e = field.from_u64(beta);
            let tau_e = field.from_u64(tau);
            let mut count = 0u64;
            for x in &all {
                let sigma_x =
                    field.add(&field.mul(&alpha_e, &frobenius_power(&field, x, n)), &beta_e);
                if sigma_x != *x {
                    continue;
                }
                let fx = field.eval_poly(&fq, x);
                for y in &all {
                    let twisted = field.mul(&tau_e, &frobenius_power(&field, y, n));
                    if field.mul(y, y) == fx && twisted == *y {
                        count += 1;
                    }
                }
            }
            if f.len() - 1 == 3 {
                count += 1;
            } else {
                let lc = field.from_u64(*f.last().expect("nonzero polynomial"));
                let a2 = field.mul(&alpha_e, &alpha_e);
                for w in &all {
                    let twisted = field.mul(&tau_e, &frobenius_power(&field, w, n));
                    if field.mul(w, w) == lc && twisted == field.mul(&a2, w) {
                        count += 1;
                    }
                }
            }
            Ok(count)
        }
    }
}

/// νₙ(χ) = (1/|G|) Σ_g χ(g⁻¹) ♯Fix(gFⁿ), computed over class
/// representatives. `chi` is a class function, one value per class.
pub fn nu_n(a: &ActionData, chi: &[BigRational], n: u32) -> Result<BigRational, ArtinError> {
    let cd = a.group();
    if chi.len() != cd.num_classes() {
        return Err(ArtinError::BadClassFunction {
            got: chi.len(),
            want: cd.num_classes(),
        });
    }
    let mut acc = rat(0);
    for c in 0..cd.num_classes() {
        let rep = cd.class_rep(c);
        let fix = fix_count(a, rep, n)?;
        let chi_inv = &chi[cd.class_of(cd.inverse(rep))];
        acc += rat(cd.class_size(c) as i64) * chi_inv * BigRational::from_integer(BigInt::from(fix));
    }
    Ok(acc / rat(cd.order() as i64))
}

/// A truncated L-series L(X, χ, t) = exp(Σ νₙ(χ) tⁿ/n).
#[derive(Debug, Clone, PartialEq)]
pub struct LSeries {
    chi: Vec<BigRational>,
    series: RationalSeries<BigRational>,
}

impl LSeries {
    pub fn chi(&self) -> &[BigRational] {
        &self.chi
    }

    pub fn series(&self) -> &RationalSeries<BigRational> {
        &self.series
    }

    pub fn order(&self) -> usize {
        self.series.order()
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.series.coeff(i)
    }

    pub fn has_integer_coefficients(&self) -> bool {
        self.series.coeffs().iter().all(|c| c.is_integer())
    }

    pub fn to_json_string(&self) -> String {
        let chi: Vec<String> = self.chi.iter().map(|v| v.to_string()).collect();
        let coefficients: Vec<String> =
            self.series.coeffs().iter().map(|v| v.to_string()).collect();
        serde_json::json!({ "chi": chi, "coefficients": coefficients }).to_string()
    }
}

/// Assembles ν₁..ν_order (in parallel across n) and exponentiates.
pub fn artin_l(a: &ActionData, chi: &[BigRational], order: usize) -> Result<LSeries, ArtinError> {
    if chi.len() != a.group().num_classes() {
        return Err(ArtinError::BadClassFunction {
            got: chi.len(),
            want: a.group().num_classes(),
        });
    }
    let nus: Result<Vec<BigRational>, ArtinError> = std::thread::scope(|scope| {
        let handles: Vec<_> = (1..=order)
            .map(|n| scope.spawn(move || nu_n(a, chi, n as u32)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("nu_n task panicked"))
            .collect()
    });
    let nus = nus?;
    let mut coeffs = vec![rat(0)];
    for (i, nu) in nus.iter().enumerate() {
        coeffs.push(nu / rat(i as i64 + 1));
    }
    let series = RationalSeries::from_coeffs(coeffs)
        .exp()
        .expect("log-series has zero constant term");
    Ok(LSeries {
        chi: chi.to_vec(),
        series,
    })
}

/// Outcome of a formalism identity check.
#[derive(Debug, Clone, PartialEq)]
pub enum FormalismOutcome {
    Holds,
    Fails { witness: String },
}

impl FormalismOutcome {
    pub fn holds(&self) -> bool {
        matches!(self, FormalismOutcome::Holds)
    }
}

/// Which identity of the character formalism to verify.
pub enum FormalismIdentity<'a> {
    /// L(χ + χ′) = L(χ)·L(χ′).
    Additivity {
        chi: &'a [BigRational],
        chi_prime: &'a [BigRational],
    },
    /// L_G(X, Ind_H^G χ) = L_H(X, χ) for the restricted action.
    Induction {
        subgroup: &'a SubgroupData,
        chi_row: usize,
    },
    /// L_G(X, χ″∘proj) equals the assembly from coset-averaged fixed counts.
    Inflation {
        quotient: &'a QuotientData,
        chi_row: usize,
    },
    /// Z(X, t) = ∏_{χ irr} L(X, χ, t)^{χ(1)}.
    Factorization,
}

pub fn series_match(
    lhs: &RationalSeries<BigRational>,
    rhs: &RationalSeries<BigRational>,
) -> FormalismOutcome {
    for i in 0..=lhs.order().max(rhs.order()) {
        if lhs.coeff(i) != rhs.coeff(i) {
            return FormalismOutcome::Fails {
                witness: format!("series differ at t^{i}: {} vs {}", lhs.coeff(i), rhs.coeff(i)),
            };
        }
    }
    FormalismOutcome::Holds
}

pub fn formalism_check(
    a: &ActionData,
    which: &FormalismIdentity,
    order: usize,
) -> Result<FormalismOutcome, ArtinError> {
    match which {
        FormalismIdentity::Additivity { chi, chi_prime } => {
            let sum = add_class_functions(chi, chi_prime);
            let lhs = artin_l(a, &sum, order)?;
            let rhs = artin_l(a, chi, order)?
                .series
                .mul(artin_l(a, chi_prime, order)?.series())
                .expect("orders match");
            Ok(series_match(lhs.series(), &rhs))
        }
        FormalismIdentity::Induction { subgroup, chi_row } => {
            let ind = induced_character(a.group(), subgroup, *chi_row)?;
            let lhs = artin_l(a, &ind, order)?;
            let restricted = ActionData::new(
                a.curve().clone(),
                subgroup.group.clone(),
                subgroup.elements.iter().map(|&g| a.map(g).clone()).collect(),
            )?;
            let rhs = artin_l(&restricted, subgroup.group.irreducible(*chi_row), order)?;
            Ok(series_match(lhs.series(), rhs.series()))
        }
        FormalismIdentity::Inflation { quotient, chi_row } => {
            let infl = inflated_character(a.group(), quotient, *chi_row)?;
            let lhs = artin_l(a, &infl, order)?;
            let q = &quotient.group;
            let chi_q = q.irreducible(*chi_row);
            let mut coeffs = vec![rat(0)];
            for n in 1..=order {
                let mut acc = rat(0);
                for qe in 0..q.order() {
                    let val = q.char_value(chi_q, q.inverse(qe));
                    let mut fix_sum = rat(0);
                    let mut coset = 0i64;
                    for g in 0..a.group().order() {
                        if quotient.proj[g] == qe {
                            fix_sum += BigRational::from_integer(BigInt::from(fix_count(
                                a, g, n as u32,
                            )?));
                            coset += 1;
                        }
                    }
                    acc += val * fix_sum / rat(coset);
                }
                coeffs.push(acc / rat(q.order() as i64) / rat(n as i64));
            }
            let rhs = RationalSeries::from_coeffs(coeffs)
                .exp()
                .expect("log-series has zero constant term");
            Ok(series_match(lhs.series(), &rhs))
        }
        FormalismIdentity::Factorization => {
            let mut counts = Vec::with_capacity(order);
            for n in 1..=order {
                counts.push(count_curve(a.curve(), n as u32)?);
            }
            let lhs = zeta_series_from_counts(&counts);
            let mut rhs = RationalSeries::one(order);
            for i in 0..a.group().num_classes() {
                let l = artin_l(a, a.group().irreducible(i), order)?;
                let deg = i64::try_from(a.group().degree(i).to_integer())
                    .expect("degree fits i64");
                rhs = rhs
                    .mul(&l.series().powi(deg).expect("positive power"))
                    .expect("orders match");
            }
            Ok(series_match(&lhs, &rhs))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::chartab::{
        character_table_s3, character_table_trivial, character_table_v4, character_table_z2,
    };
    use super::*;
    use crate::curvezeta::{hasse_weil, CurveData};
    use crate::exactalg::Poly;

    fn moebius(a: i64, b: i64, c: i64, d: i64, p: i64) -> Automorphism {
        Automorphism::Moebius {
            a: a.rem_euclid(p) as u64,
            b: b.rem_euclid(p) as u64,
            c: c.rem_euclid(p) as u64,
            d: d.rem_euclid(p) as u64,
        }
    }

    fn hyperell(alpha: i64, beta: i64, tau: i64, p: i64) -> Automorphism {
        Automorphism::HyperellMap {
            alpha: alpha.rem_euclid(p) as u64,
            beta: beta.rem_euclid(p) as u64,
            tau: tau.rem_euclid(p) as u64,
        }
    }

    fn z2_line(p: u64) -> ActionData {
        ActionData::new(
            CurveData::projective_line(p).unwrap(),
            character_table_z2(),
            vec![
                moebius(1, 0, 0, 1, p as i64),
                moebius(-1, 0, 0, 1, p as i64),
            ],
        )
        .unwrap()
    }

    fn s3_line() -> ActionData {
        ActionData::new(
            CurveData::projective_line(3).unwrap(),
            character_table_s3(),
            vec![
                moebius(1, 0, 0, 1, 3),
                moebius(0, 1, -1, 1, 3),
                moebius(1, -1, 1, 0, 3),
                moebius(1, 0, 1, -1, 3),
                moebius(0, 1, 1, 0, 3),
                moebius(-1, 1, 0, 1, 3),
            ],
        )
        .unwrap()
    }

    fn v4_line() -> ActionData {
        ActionData::new(
            CurveData::projective_line(3).unwrap(),
            character_table_v4(),
            vec![
                moebius(1, 0, 0, 1, 3),
                moebius(-1, 0, 0, 1, 3),
                moebius(0, 1, 1, 0, 3),
                moebius(0, -1, 1, 0, 3),
            ],
        )
        .unwrap()
    }

    /// The hyperelliptic involution on y² = x³ − x over 𝔽₃.
    fn z2_elliptic() -> ActionData {
        ActionData::new(
            CurveData::hyperelliptic(3, &[0, -1, 0, 1]).unwrap(),
            character_table_z2(),
            vec![hyperell(1, 0, 1, 3), hyperell(1, 0, -1, 3)],
        )
        .unwrap()
    }

    /// The hyperelliptic involution on the quartic model y² = x⁴ + x + 1.
    fn z2_quartic() -> ActionData {
        ActionData::new(
            CurveData::hyperelliptic(3, &[1, 1, 0, 0, 1]).unwrap(),
            character_table_z2(),
            vec![hyperell(1, 0, 1, 3), hyperell(1, 0, -1, 3)],
        )
        .unwrap()
    }

    fn trivial_on_elliptic() -> ActionData {
        ActionData::new(
            CurveData::hyperelliptic(3, &[0, -1, 0, 1]).unwrap(),
            character_table_trivial(),
            vec![hyperell(1, 0, 1, 3)],
        )
        .unwrap()
    }

    #[test]
    fn line_fixed_counts_match_the_hand_values() {
        let a = z2_line(3);
        assert_eq!(fix_count(&a, 0, 1).unwrap(), 4);
        assert_eq!(fix_count(&a, 1, 1).unwrap(), 4);
        assert_eq!(fix_count(&a, 1, 2).unwrap(), 10);
        assert_eq!(fix_count_brute(&a, 1, 1).unwrap(), 4);
        assert_eq!(fix_count_brute(&a, 1, 2).unwrap(), 10);
    }

    #[test]
    fn closed_form_agrees_with_brute_force_on_small_fields() {
        for (action, max_n) in [(z2_line(3), 3), (s3_line(), 2), (v4_line(), 2)] {
            for g in 0..action.group().order() {
                for n in 1..=max_n {
                    assert_eq!(
                        fix_count(&action, g, n).unwrap(),
                        fix_count_brute(&action, g, n).unwrap(),
                        "element {g}, degree {n}"
                    );
                }
            }
        }
        for action in [z2_elliptic(), z2_quartic()] {
            for g in 0..2 {
                for n in 1..=2 {
                    assert_eq!(
                        fix_count(&action, g, n).unwrap(),
                        fix_count_brute(&action, g, n).unwrap(),
                        "element {g}, degree {n}"
                    );
                }
            }
        }
    }

    #[test]
    fn twisted_counts_on_the_elliptic_curve() {
        // Fix(σFⁿ) = 2·3ⁿ + 2 − Nₙ for the hyperelliptic involution
        let a = z2_elliptic();
        for (n, want) in [(1, 4), (2, 4), (3, 28), (4, 100)] {
            assert_eq!(fix_count(&a, 1, n).unwrap(), want, "degree {n}");
        }
        // identity recovers the plain point counts
        for n in 1..=4 {
            assert_eq!(
                fix_count(&a, 0, n).unwrap(),
                count_curve(a.curve(), n).unwrap()
            );
        }
        let q = z2_quartic();
        assert_eq!(fix_count(&q, 1, 1).unwrap(), 1);
        assert_eq!(fix_count(&q, 1, 2).unwrap(), 13);
        for n in 1..=3 {
            assert_eq!(
                fix_count(&q, 0, n).unwrap(),
                count_curve(q.curve(), n).unwrap()
            );
        }
    }

    #[test]
    fn sign_l_series_on_the_line_is_one() {
        let a = z2_line(3);
        let sign = a.group().irreducible(1).to_vec();
        let l = artin_l(&a, &sign, 8).unwrap();
        assert_eq!(*l.series(), RationalSeries::one(8));
    }

    #[test]
    fn trivial_character_gives_the_quotient_zeta() {
        // the quotient of both bundled Z/2 actions is P^1 again
        let line = hasse_weil(&CurveData::projective_line(3).unwrap()).unwrap();
        let expected4 = line.rational().expand(4).unwrap();
        let expected8 = line.rational().expand(8).unwrap();
        let a = z2_line(3);
        let triv = a.group().irreducible(0).to_vec();
        assert_eq!(*artin_l(&a, &triv, 8).unwrap().series(), expected8);
        let e = z2_elliptic();
        let triv = e.group().irreducible(0).to_vec();
        assert_eq!(*artin_l(&e, &triv, 4).unwrap().series(), expected4);
    }

    #[test]
    fn sign_l_series_on_the_elliptic_curve_is_the_zeta_numerator() {
        let a = z2_elliptic();
        let sign = a.group().irreducible(1).to_vec();
        let l = artin_l(&a, &sign, 4).unwrap();
        // L(sign) = P(t) = 1 + 3t²; quotienting kills the denominator
        let p_t = Poly::new(vec![rat(1), rat(0), rat(3)]);
        assert_eq!(*l.series(), RationalSeries::from_poly(&p_t, 4));
        assert!(l.has_integer_coefficients());
        assert_eq!(
            artin_l(&a, &sign, 2).unwrap().to_json_string(),
            r#"{"chi":["1","-1"],"coefficients":["1","0","3"]}"#
        );
    }

    #[test]
    fn trivial_group_and_regular_character_recover_the_full_zeta() {
        let counts: Vec<u64> = (1..=4)
            .map(|n| count_curve(trivial_on_elliptic().curve(), n).unwrap())
            .collect();
        assert_eq!(counts, vec![4, 16, 28, 64]);
        let z = zeta_series_from_counts(&counts);
        let t = trivial_on_elliptic();
        let triv = t.group().irreducible(0).to_vec();
        assert_eq!(*artin_l(&t, &triv, 4).unwrap().series(), z);
        let e = z2_elliptic();
        let reg = e.group().regular_character();
        assert_eq!(*artin_l(&e, &reg, 4).unwrap().series(), z);
    }

    #[test]
    fn nu_denominators_divide_the_group_order_and_orthogonality_holds() {
        let actions = [s3_line(), z2_elliptic()];
        for a in &actions {
            let cd = a.group();
            for n in 1..=2u32 {
                let mut weighted = rat(0);
                for i in 0..cd.num_classes() {
                    let nu = nu_n(a, cd.irreducible(i), n).unwrap();
                    let order = BigInt::from(cd.order() as i64);
                    assert_eq!(
                        &order % nu.denom(),
                        BigInt::from(0),
                        "denominator {} does not divide |G|",
                        nu.denom()
                    );
                    weighted += cd.degree(i) * nu;
                }
                let total = fix_count(a, cd.identity(), n).unwrap();
                assert_eq!(weighted, rat(total as i64), "degree {n}");
            }
        }
    }

    #[test]
    fn factorization_holds_for_the_bundled_actions() {
        assert!(formalism_check(&z2_line(3), &FormalismIdentity::Factorization, 8)
            .unwrap()
            .holds());
        assert!(formalism_check(&z2_line(5), &FormalismIdentity::Factorization, 8)
            .unwrap()
            .holds());
        assert!(formalism_check(&z2_elliptic(), &FormalismIdentity::Factorization, 4)
            .unwrap()
            .holds());
        assert!(formalism_check(&s3_line(), &FormalismIdentity::Factorization, 2)
            .unwrap()
            .holds());
        assert!(formalism_check(&v4_line(), &FormalismIdentity::Factorization, 3)
            .unwrap()
            .holds());
    }

    #[test]
    fn additivity_holds_including_the_zero_character() {
        let a = z2_elliptic();
        let triv = a.group().irreducible(0).to_vec();
        let sign = a.group().irreducible(1).to_vec();
        let zero = vec![rat(0); 2];
        for pair in [(&triv, &sign), (&triv, &zero), (&sign, &zero)] {
            let id = FormalismIdentity::Additivity {
                chi: pair.0,
                chi_prime: pair.1,
            };
            assert!(formalism_check(&a, &id, 4).unwrap().holds());
        }
    }

    #[test]
    fn induction_from_the_trivial_subgroup_and_a_transposition() {
        // Ind from {e} of the trivial character is the regular character;
        // both sides equal Z(E, t).
        let e = z2_elliptic();
        let sub = SubgroupData {
            elements: vec![0],
            group: character_table_trivial(),
        };
        let id = FormalismIdentity::Induction {
            subgroup: &sub,
            chi_row: 0,
        };
        assert!(formalism_check(&e, &id, 4).unwrap().holds());
        // S3 induced from a transposition subgroup
        let s3 = s3_line();
        let sub = SubgroupData {
            elements: vec![0, 3],
            group: character_table_z2(),
        };
        for chi_row in 0..2 {
            let id = FormalismIdentity::Induction {
                subgroup: &sub,
                chi_row,
            };
            assert!(formalism_check(&s3, &id, 2).unwrap().holds());
        }
        // a non-subgroup embedding is rejected
        let bad = SubgroupData {
            elements: vec![0, 1],
            group: character_table_z2(),
        };
        let id = FormalismIdentity::Induction {
            subgroup: &bad,
            chi_row: 0,
        };
        assert!(matches!(
            formalism_check(&s3, &id, 2),
            Err(ArtinError::BadSubgroup(_))
        ));
    }

    #[test]
    fn inflation_through_quotients() {
        // degenerate quotient by the whole group
        let a = z2_line(3);
        let q = QuotientData {
            proj: vec![0, 0],
            group: character_table_trivial(),
        };
        let id = FormalismIdentity::Inflation {
            quotient: &q,
            chi_row: 0,
        };
        assert!(formalism_check(&a, &id, 4).unwrap().holds());
        // S3 -> Z/2 by permutation sign
        let s3 = s3_line();
        let q = QuotientData {
            proj: vec![0, 0, 0, 1, 1, 1],
            group: character_table_z2(),
        };
        for chi_row in 0..2 {
            let id = FormalismIdentity::Inflation {
                quotient: &q,
                chi_row,
            };
            assert!(formalism_check(&s3, &id, 2).unwrap().holds());
        }
    }

    #[test]
    fn series_match_reports_the_first_mismatch() {
        let z_line = zeta_series_from_counts(&[4, 10, 28]);
        let z_e = zeta_series_from_counts(&[4, 16, 28]);
        match series_match(&z_line, &z_e) {
            FormalismOutcome::Fails { witness } => {
                assert!(witness.contains("t^2"), "witness: {witness}");
            }
            FormalismOutcome::Holds => panic!("distinct series must not match"),
        }
    }

    #[test]
    fn class_function_length_is_validated() {
        let a = z2_line(3);
        assert!(matches!(
            artin_l(&a, &[rat(1)], 4),
            Err(ArtinError::BadClassFunction { got: 1, want: 2 })
        ));
    }

    #[test]
    fn json_action_files_round_through_the_l_machinery() {
        let j = r#"{
            "curve": {"model": "hyperelliptic", "p": 3, "f": [0, -1, 0, 1]},
            "group": { "labels": ["e","s"], "inverse": [0,1], "classes": [[0],[1]],
                       "mult": [[0,1],[1,0]], "table": [["1","1"],["1","-1"]] },
            "maps": [ {"kind": "hyperelliptic", "coeffs": [1,0,1]},
                      {"kind": "hyperelliptic", "coeffs": [1,0,-1]} ]
        }"#;
        let a = ActionData::from_json_str(j).unwrap();
        let sign = a.group().irreducible(1).to_vec();
        assert_eq!(artin_l(&a, &sign, 3).unwrap().coeff(2), rat(3));
    }
}
