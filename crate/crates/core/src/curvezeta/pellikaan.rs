//! Pellikaan's two-variable zeta: the Hasse–Weil zeta with the field size
//! replaced by an indeterminate u, for genus ≤ 1.
//!
//! Each line-bundle class of degree d contributes (u^{h⁰} − 1)/(u − 1) t^d.
//! Riemann–Roch pins the h⁰ values in low genus: on a genus-0 curve the
//! degree-d class has h⁰ = d + 1; on a genus-1 curve the trivial class has
//! h⁰ = 1, every other degree-0 class has h⁰ = 0, and each of the N₁ classes
//! in degree d ≥ 1 has h⁰ = d. Summing the resulting geometric series puts
//! the zeta over the common denominator (1 − t)(1 − ut).

use super::curve::{count_curve, CurveData, CurveError};
use crate::exactalg::{rat, BigRational, Poly, RationalFunction};

/// Rational functions in the variable u.
pub type UFunc = RationalFunction<BigRational>;

/// A rational function in t whose coefficients are rational functions in u.
pub type TwoVarZeta = RationalFunction<UFunc>;

/// u as an element of ℚ(u).
pub fn u_var() -> UFunc {
    RationalFunction::from_poly(Poly::new(vec![rat(0), rat(1)]))
}

/// The quantum integer [d]_u = 1 + u + … + u^{d-1}.
pub fn quantum_integer(d: usize) -> UFunc {
    RationalFunction::from_poly(Poly::new(vec![rat(1); d]))
}

/// Pellikaan's zeta for a curve of genus 0 or 1, over the common
/// denominator (1 − t)(1 − ut).
pub fn pellikaan_zeta(c: &CurveData) -> Result<TwoVarZeta, CurveError> {
    let g = c.genus();
    if g > 1 {
        return Err(CurveError::UnsupportedGenus(g));
    }
    let u = u_var();
    let den = Poly::new(vec![
        UFunc::one(),
        UFunc::one().add(&u).neg(),
        u.clone(),
    ]);
    let num = if g == 0 {
        Poly::new(vec![UFunc::one()])
    } else {
        // 1 + sum_{d>=1} N1 [d]_u t^d over (1-t)(1-ut) clears to
        // 1 + (N1 - 1 - u) t + u t².
        let n1 = count_curve(c, 1)?;
        Poly::new(vec![
            UFunc::one(),
            UFunc::constant(rat(n1 as i64)).sub(&UFunc::one()).sub(&u),
            u.clone(),
        ])
    };
    Ok(RationalFunction::new(num, den))
}

/// Specializes u to a number, yielding an ordinary rational function in t.
pub fn specialize_u(z: &TwoVarZeta, value: &BigRational) -> RationalFunction<BigRational> {
    let eval = |c: &UFunc| c.eval(value).expect("specialization hits a pole in u");
    RationalFunction::new(z.num().map(&eval), z.den().map(&eval))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curvezeta::zeta::hasse_weil;

    fn elliptic_a0() -> CurveData {
        CurveData::hyperelliptic(3, &[0, -1, 0, 1]).unwrap()
    }

    #[test]
    fn genus_zero_closed_form_and_sum_route() {
        let line = CurveData::projective_line(3).unwrap();
        let z = pellikaan_zeta(&line).unwrap();
        assert_eq!(z.num(), &Poly::new(vec![UFunc::one()]));
        // Sum route: coefficient of t^d is [d+1]_u.
        let series = z.expand(5).unwrap();
        for d in 0..=5 {
            assert_eq!(series.coeff(d), quantum_integer(d + 1), "degree {d}");
        }
    }

    #[test]
    fn genus_one_sum_route_oracle() {
        // Coefficient of t^d (d >= 1) must be N1 [d]_u; the constant term is
        // the trivial bundle's contribution, 1.
        let z = pellikaan_zeta(&elliptic_a0()).unwrap();
        let n1 = UFunc::constant(rat(4));
        let series = z.expand(6).unwrap();
        assert_eq!(series.coeff(0), UFunc::one());
        for d in 1..=6 {
            assert_eq!(
                series.coeff(d),
                n1.mul(&quantum_integer(d)),
                "degree {d}"
            );
        }
    }

    #[test]
    fn specializing_u_to_q_gives_hasse_weil() {
        let c = elliptic_a0();
        let z2 = pellikaan_zeta(&c).unwrap();
        let hw = hasse_weil(&c).unwrap();
        assert_eq!(specialize_u(&z2, &rat(3)), hw.rational());
        let line = CurveData::projective_line(3).unwrap();
        assert_eq!(
            specialize_u(&pellikaan_zeta(&line).unwrap(), &rat(3)),
            hasse_weil(&line).unwrap().rational()
        );
    }

    #[test]
    fn specializing_u_to_one_counts_divisor_classes() {
        // At u = 1 the degree-d coefficient degenerates to N1 * d: the
        // number of effective classes weighted by h0 collapses to a count.
        let z = pellikaan_zeta(&elliptic_a0()).unwrap();
        let series = z.expand(5).unwrap();
        for d in 1..=5 {
            let at_one = series.coeff(d).eval(&rat(1)).unwrap();
            assert_eq!(at_one, rat(4 * d as i64));
        }
    }

    #[test]
    fn functional_equation_in_u() {
        // The genus-1 numerator keeps the a_{2-i} = u^{1-i} a_i symmetry
        // with u in place of q: the t² coefficient is u times the constant.
        let z = pellikaan_zeta(&elliptic_a0()).unwrap();
        assert_eq!(z.num().coeff(2), u_var());
        assert_eq!(z.num().coeff(0), UFunc::one());
    }

    #[test]
    fn genus_bound_is_enforced() {
        let quartic = CurveData::plane(
            2,
            &[((4, 0, 0), 1), ((0, 4, 0), 1), ((0, 0, 4), 1), ((1, 1, 2), 1)],
        )
        .unwrap();
        assert_eq!(
            pellikaan_zeta(&quartic),
            Err(CurveError::UnsupportedGenus(3))
        );
    }
}
