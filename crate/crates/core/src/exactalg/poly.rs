//! Dense univariate polynomials over a generic coefficient ring.

use super::ring::CoeffRing;
use num::{BigInt, BigRational, One, Signed, Zero};

/// A univariate polynomial, stored dense with no trailing zero coefficient.
/// The indeterminate is anonymous; a name is supplied only when printing.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly<R: CoeffRing> {
    coeffs: Vec<R>,
}

impl<R: CoeffRing> Poly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Poly::constant(R::one())
    }

    pub fn constant(c: R) -> Self {
        Poly::new(vec![c])
    }

    /// The identity polynomial `x`.
    pub fn var() -> Self {
        Poly::new(vec![R::zero(), R::one()])
    }

    /// `c * x^k`.
    pub fn monomial(c: R, k: usize) -> Self {
        let mut v = vec![R::zero(); k + 1];
        v[k] = c;
        Poly::new(v)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(R::zero)
    }

    pub fn lead(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i).add(&rhs.coeff(i)));
        }
        Poly::new(out)
    }

    pub fn neg(&self) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Poly::new(out)
    }

    pub fn scale(&self, c: &R) -> Self {
        Poly::new(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![R::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        Poly { coeffs: v }
    }

    /// Coefficient reversal `x^deg * p(1/x)`.
    pub fn reverse(&self) -> Self {
        let mut v = self.coeffs.clone();
        v.reverse();
        Poly::new(v)
    }

    pub fn eval(&self, x: &R) -> R {
        let mut acc = R::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        let out = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.mul(&R::from_i64(i as i64)))
            .collect();
        Poly::new(out)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Euclidean division; `None` when a leading-coefficient division fails
    /// in the ring.
    pub fn divmod(&self, d: &Self) -> Option<(Self, Self)> {
        let dd = d.degree()?;
        let dlead = d.lead().unwrap().clone();
        let mut rem = self.clone();
        let mut quo = vec![R::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let q = rem.lead().unwrap().try_div(&dlead)?;
            let k = rd - dd;
            quo[k] = q.clone();
            rem = rem.sub(&d.scale(&q).shift(k));
        }
        Some((Poly::new(quo), rem))
    }

    /// Exact division; `None` when `d` does not divide `self` in the ring.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.divmod(d)?;
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }

    /// Monic Euclidean gcd. Succeeds over fields; over other rings it may
    /// return `None` when an intermediate leading coefficient is not a unit.
    pub fn gcd(&self, rhs: &Self) -> Option<Self> {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let inv = b.lead().unwrap().try_inv()?;
            let bm = b.scale(&inv);
            let (_, r) = a.divmod(&bm)?;
            a = bm;
            b = r;
        }
        if let Some(l) = a.lead() {
            if let Some(inv) = l.try_inv() {
                return Some(a.scale(&inv));
            }
        }
        Some(a)
    }

    /// Maps coefficients into another ring.
    pub fn map<S: CoeffRing>(&self, f: impl Fn(&R) -> S) -> Poly<S> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    /// Renders with the given variable name: descending powers, `^` for
    /// exponents, unit coefficients omitted.
    pub fn display(&self, var: &str) -> String
    where
        R: std::fmt::Display,
    {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let s = format!("{c}");
            let (sign, mag) = match s.strip_prefix('-') {
                Some(rest) => ("-", rest.to_string()),
                None => ("+", s),
            };
            if out.is_empty() {
                if sign == "-" {
                    out.push('-');
                }
            } else {
                out.push_str(if sign == "-" { " - " } else { " + " });
            }
            let needs_parens = mag.contains('+') || mag.contains(" - ") || mag.contains('/');
            let mag_str = if needs_parens && i > 0 {
                format!("({mag})")
            } else {
                mag.clone()
            };
            if i == 0 {
                out.push_str(&mag_str);
            } else if mag == "1" {
                out.push_str(&var_pow(var, i));
            } else {
                out.push_str(&format!("{mag_str}*{}", var_pow(var, i)));
            }
        }
        out
    }
}

fn var_pow(var: &str, i: usize) -> String {
    if i == 1 {
        var.to_string()
    } else {
        format!("{var}^{i}")
    }
}

impl<R: CoeffRing + std::fmt::Display> std::fmt::Debug for Poly<R> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.display("x"))
    }
}

/// Polynomials over a ring form a ring; units are unit constants.
impl<R: CoeffRing + std::fmt::Display> CoeffRing for Poly<R> {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::one()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, rhs: &Self) -> Self {
        Poly::add(self, rhs)
    }
    fn neg(&self) -> Self {
        Poly::neg(self)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Poly::mul(self, rhs)
    }
    fn try_inv(&self) -> Option<Self> {
        if self.degree() == Some(0) {
            self.coeffs[0].try_inv().map(Poly::constant)
        } else {
            None
        }
    }
    fn try_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        self.exact_div(rhs)
    }
    fn from_i64(v: i64) -> Self {
        Poly::constant(R::from_i64(v))
    }
}

fn content(p: &Poly<BigInt>) -> BigInt {
    let mut g = BigInt::from(0);
    for c in p.coeffs() {
        g = num::Integer::gcd(&g, c);
    }
    g
}

fn primitive_part(p: &Poly<BigInt>) -> Poly<BigInt> {
    let c = content(p);
    if Zero::is_zero(&c) || c.is_one() {
        return p.clone();
    }
    p.map(|x| x / &c)
}

/// Gcd of integer polynomials via the subresultant remainder sequence.
/// The result is primitive with positive leading coefficient (content gcd
/// multiplied back in).
pub fn gcd_int_poly(a: &Poly<BigInt>, b: &Poly<BigInt>) -> Poly<BigInt> {
    if a.is_zero() {
        return normalize_sign(b.clone());
    }
    if b.is_zero() {
        return normalize_sign(a.clone());
    }
    let cont = num::Integer::gcd(&content(a), &content(b));
    let mut p = primitive_part(a);
    let mut q = primitive_part(b);
    if p.degree() < q.degree() {
        std::mem::swap(&mut p, &mut q);
    }
    // Subresultant PRS keeps coefficient growth polynomial; pseudo-division
    // avoids leaving the integers.
    let mut g = BigInt::from(1);
    let mut h = BigInt::from(1);
    loop {
        let dp = p.degree().unwrap();
        let dq = q.degree().unwrap();
        let delta = dp - dq;
        let lead = q.lead().unwrap().clone();
        // pseudo-remainder: lead^(delta+1) * p mod q
        let scaled = p.scale(&num::pow::pow(lead.clone(), delta + 1));
        let (_, r) = scaled.divmod(&q).expect("pseudo-division is exact over the integers");
        if r.is_zero() {
            return normalize_sign(primitive_part(&q)).scale(&cont);
        }
        if r.degree() == Some(0) {
            return Poly::constant(cont);
        }
        let divisor = &g * num::pow::pow(h.clone(), delta);
        p = q;
        q = r.map(|c| c / &divisor);
        g = p.lead().unwrap().clone();
        h = if delta == 0 {
            h
        } else {
            // h^(1-delta) g^delta, kept integral by the PRS invariants
            let num_ = num::pow::pow(g.clone(), delta);
            let den = num::pow::pow(h.clone(), delta - 1);
            if delta == 1 {
                num_
            } else {
                &num_ / &den
            }
        };
    }
}

fn normalize_sign(p: Poly<BigInt>) -> Poly<BigInt> {
    match p.lead() {
        Some(l) if l.is_negative() => p.neg(),
        _ => p,
    }
}

/// Gcd of rational polynomials, returned monic.
pub fn gcd_rat_poly(a: &Poly<BigRational>, b: &Poly<BigRational>) -> Poly<BigRational> {
    a.gcd(b).expect("gcd over a field always succeeds")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;

    fn zp(v: &[i64]) -> Poly<BigInt> {
        Poly::new(v.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn mul_and_divmod_roundtrip() {
        let a = zp(&[1, 2, 1]); // (1+x)^2
        let b = zp(&[1, 1]);
        let (q, r) = a.divmod(&b).unwrap();
        assert_eq!(q, b);
        assert!(r.is_zero());
    }

    #[test]
    fn gcd_of_integer_polys() {
        // (x-1)(x+1) and (x-1)(x+2) share x-1
        let a = zp(&[-1, 0, 1]);
        let b = zp(&[-2, 1, 1]);
        assert_eq!(gcd_int_poly(&a, &b), zp(&[-1, 1]));
        // content is respected: 2(x-1) and 4(x-1)^2 share 2(x-1)
        let c = zp(&[-2, 2]);
        let d = zp(&[4, -8, 4]);
        assert_eq!(gcd_int_poly(&c, &d), zp(&[-2, 2]));
    }

    #[test]
    fn gcd_coprime_is_constant() {
        let a = zp(&[1, 0, 1]);
        let b = zp(&[-1, 1]);
        assert_eq!(gcd_int_poly(&a, &b), zp(&[1]));
    }

    #[test]
    fn subresultant_matches_rational_gcd_on_samples() {
        // cross-check the integer PRS against the monic Euclidean gcd
        let samples = [
            (vec![6, -5, 1], vec![-3, 1]),        // (x-2)(x-3) vs x-3
            (vec![1, 3, 3, 1], vec![1, 2, 1]),    // (1+x)^3 vs (1+x)^2
            (vec![-1, 0, 0, 0, 0, 0, 1], vec![-1, 0, 0, 1]), // x^6-1 vs x^3-1
            (vec![2, 7, 3], vec![5, 1]),          // coprime
        ];
        for (a, b) in samples {
            let za = zp(&a);
            let zb = zp(&b);
            let g1 = gcd_int_poly(&za, &zb);
            let qa = za.map(|c| BigRational::from_integer(c.clone()));
            let qb = zb.map(|c| BigRational::from_integer(c.clone()));
            let g2 = gcd_rat_poly(&qa, &qb);
            // compare up to rational scaling
            let g1q = g1.map(|c| BigRational::from_integer(c.clone()));
            let lead = g1q.lead().unwrap().clone();
            assert_eq!(g1q.scale(&lead.recip()), g2);
        }
    }

    #[test]
    fn eval_horner() {
        let p = zp(&[1, -4, 3]); // 1 - 4x + 3x^2
        assert_eq!(p.eval(&BigInt::from(2)), BigInt::from(5));
    }

    #[test]
    fn display_descending() {
        let p = zp(&[0, -1, 0, 1]);
        assert_eq!(p.display("L"), "L^3 - L");
        let q = Poly::new(vec![rat(1), rat(-4), rat(3)]);
        assert_eq!(q.display("t"), "3*t^2 - 4*t + 1");
    }
}
