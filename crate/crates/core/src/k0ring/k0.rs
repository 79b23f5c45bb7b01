//! Exact arithmetic in the localized Grothendieck ring: integer polynomials
//! in the Lefschetz class `L`, with denominators restricted to products of
//! `L^a` and `(L^n - 1)` factors.
//!
//! Elements are kept in a canonical reduced form, so structural equality is
//! semantic equality. Canonicalization reduces the raw fraction over the
//! integers, then factors the denominator into cyclotomic polynomials and
//! regroups them into `(L^n - 1)` factors, largest `n` first; cyclotomic
//! factors the regrouping over-supplies are pushed back into the numerator.

use crate::exactalg::{gcd_int_poly, BigInt, BigRational, Poly, RationalFunction};
use num::{Integer, One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum K0Error {
    #[error("denominator {0} is not invertible in the localization at L and L^n - 1")]
    NotInLocalization(String),
    #[error("pole: the denominator vanishes at L = {0}")]
    Pole(String),
    #[error("{0}")]
    Invalid(String),
}

/// Default truncation order for expansions in powers of `L^-1`.
pub const DEFAULT_LINV_ORDER: usize = 12;

/// An element `num / (L^a * prod (L^n - 1)^m)` of the localized ring.
#[derive(Clone, PartialEq, Eq)]
pub struct K0Element {
    num: Poly<BigInt>,
    l_pow: u32,
    s_factors: BTreeMap<u32, u32>,
}

impl K0Element {
    pub fn zero() -> Self {
        K0Element {
            num: Poly::zero(),
            l_pow: 0,
            s_factors: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_poly(Poly::constant(v.into()))
    }

    /// The Lefschetz class `L` itself.
    pub fn l() -> Self {
        Self::from_poly(Poly::var())
    }

    /// `L^k`, with negative `k` landing in the denominator.
    pub fn l_pow_class(k: i64) -> Self {
        if k >= 0 {
            Self::from_poly(Poly::monomial(BigInt::one(), k as usize))
        } else {
            K0Element {
                num: Poly::one(),
                l_pow: (-k) as u32,
                s_factors: BTreeMap::new(),
            }
        }
    }

    pub fn from_poly(num: Poly<BigInt>) -> Self {
        K0Element {
            num,
            l_pow: 0,
            s_factors: BTreeMap::new(),
        }
    }

    /// Canonicalizes `raw_num / raw_den`. Fails when the reduced denominator
    /// is not a product of `L` and `(L^n - 1)` factors.
    pub fn normalize(raw_num: Poly<BigInt>, raw_den: Poly<BigInt>) -> Result<Self, K0Error> {
        assert!(!raw_den.is_zero(), "zero denominator");
        if raw_num.is_zero() {
            return Ok(Self::zero());
        }
        let g = gcd_int_poly(&raw_num, &raw_den);
        let mut num = raw_num.exact_div(&g).expect("gcd divides numerator");
        let mut den = raw_den.exact_div(&g).expect("gcd divides denominator");
        if den.lead().expect("nonzero").is_negative() {
            num = num.neg();
            den = den.neg();
        }
        if !poly_content(&den).is_one() {
            return Err(K0Error::NotInLocalization(den.display("L")));
        }
        let l_pow = den.coeffs().iter().take_while(|c| c.is_zero()).count();
        let mut rem = Poly::new(den.coeffs()[l_pow..].to_vec());
        // Any cyclotomic divisor of rem has degree phi(d) <= deg rem, hence
        // index d <= max(6, (deg rem)^2).
        let deg0 = rem.degree().unwrap_or(0);
        let max_index = (deg0 * deg0).max(6);
        let mut table = CycloTable::new();
        let mut phi_mult: BTreeMap<u32, i64> = BTreeMap::new();
        for d in 1..=max_index {
            if rem == Poly::one() {
                break;
            }
            if euler_phi(d) > rem.degree().unwrap_or(0) {
                continue;
            }
            let phi = table.get(d);
            while let Some((q, r)) = rem.divmod(phi) {
                if !r.is_zero() {
                    break;
                }
                rem = q;
                *phi_mult.entry(d as u32).or_insert(0) += 1;
            }
        }
        if rem != Poly::one() {
            return Err(K0Error::NotInLocalization(den.display("L")));
        }
        // Regroup cyclotomic factors into (L^n - 1) factors, largest n first;
        // each (L^n - 1) supplies one copy of every cyclotomic of index
        // dividing n, so smaller indices are debited and may go negative.
        let mut s_factors: BTreeMap<u32, u32> = BTreeMap::new();
        loop {
            let Some((&d, &mult)) = phi_mult.iter().rev().find(|&(_, &m)| m > 0) else {
                break;
            };
            *s_factors.entry(d).or_insert(0) += mult as u32;
            phi_mult.insert(d, 0);
            for e in 1..d {
                if d % e == 0 {
                    *phi_mult.entry(e).or_insert(0) -= mult;
                }
            }
        }
        for (&d, &m) in &phi_mult {
            if m < 0 {
                num = num.mul(&table.get(d as usize).pow((-m) as u32));
            }
        }
        Ok(K0Element {
            num,
            l_pow: l_pow as u32,
            s_factors,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn num(&self) -> &Poly<BigInt> {
        &self.num
    }

    /// Exponent of the `L^a` denominator factor.
    pub fn denominator_l_pow(&self) -> u32 {
        self.l_pow
    }

    /// Multiset of `(L^n - 1)` denominator factors, as `n -> multiplicity`.
    pub fn denominator_factors(&self) -> &BTreeMap<u32, u32> {
        &self.s_factors
    }

    pub fn expand_den(&self) -> Poly<BigInt> {
        let mut den: Poly<BigInt> = Poly::monomial(BigInt::one(), self.l_pow as usize);
        for (&n, &m) in &self.s_factors {
            den = den.mul(&l_pow_minus_one(n as usize).pow(m));
        }
        den
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let ad = self.expand_den();
        let bd = rhs.expand_den();
        Self::normalize(self.num.mul(&bd).add(&rhs.num.mul(&ad)), ad.mul(&bd))
            .expect("sum stays in the localization")
    }

    pub fn neg(&self) -> Self {
        K0Element {
            num: self.num.neg(),
            l_pow: self.l_pow,
            s_factors: self.s_factors.clone(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self::normalize(
            self.num.mul(&rhs.num),
            self.expand_den().mul(&rhs.expand_den()),
        )
        .expect("product stays in the localization")
    }

    pub fn inv(&self) -> Result<Self, K0Error> {
        if self.is_zero() {
            return Err(K0Error::Invalid("inverse of zero".into()));
        }
        Self::normalize(self.expand_den(), self.num.clone())
    }

    pub fn try_inv(&self) -> Option<Self> {
        self.inv().ok()
    }

    pub fn powi(&self, e: i64) -> Result<Self, K0Error> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    /// Evaluates `L -> q` exactly; a vanishing denominator is a pole.
    pub fn specialize(&self, q: &BigRational) -> Result<BigRational, K0Error> {
        let den = self
            .expand_den()
            .map(|c| BigRational::from_integer(c.clone()))
            .eval(q);
        if den.is_zero() {
            return Err(K0Error::Pole(q.to_string()));
        }
        let num = self
            .num
            .map(|c| BigRational::from_integer(c.clone()))
            .eval(q);
        Ok(num / den)
    }

    pub fn specialize_int(&self, q: i64) -> Result<BigRational, K0Error> {
        self.specialize(&BigRational::from_integer(q.into()))
    }

    /// The exponent-to-multiplicity table of a denominator-free element,
    /// viewed as a virtual sum of powers of `L`; `None` when `(L^n - 1)`
    /// factors remain.
    pub fn as_laurent(&self) -> Option<BTreeMap<i64, BigInt>> {
        if !self.s_factors.is_empty() {
            return None;
        }
        let mut out = BTreeMap::new();
        for (i, c) in self.num.coeffs().iter().enumerate() {
            if !c.is_zero() {
                out.insert(i as i64 - self.l_pow as i64, c.clone());
            }
        }
        Some(out)
    }

    /// Truncated expansion in ascending powers of `L^-1`.
    pub fn expand_l_inverse(&self, order: usize) -> LInvSeries {
        if self.is_zero() {
            return LInvSeries {
                leading: 0,
                coeffs: vec![BigInt::zero(); order + 1],
            };
        }
        let deg = self.num.degree().expect("nonzero") as i64;
        let s_weight: i64 = self.s_factors.iter().map(|(&n, &m)| n as i64 * m as i64).sum();
        let leading = self.l_pow as i64 + s_weight - deg;
        let mut coeffs: Vec<BigInt> = self.num.reverse().coeffs().to_vec();
        coeffs.resize(order + 1, BigInt::zero());
        coeffs.truncate(order + 1);
        // dividing a series by (1 - u^n) is a running sum at stride n
        for (&n, &m) in &self.s_factors {
            for _ in 0..m {
                for k in n as usize..coeffs.len() {
                    let prev = coeffs[k - n as usize].clone();
                    coeffs[k] += prev;
                }
            }
        }
        LInvSeries { leading, coeffs }
    }

    /// The same fraction over the rationals, for linear-algebra passes.
    pub fn to_rational_function(&self) -> RationalFunction<BigRational> {
        RationalFunction::new(
            self.num.map(|c| BigRational::from_integer(c.clone())),
            self.expand_den().map(|c| BigRational::from_integer(c.clone())),
        )
    }

    /// Clears coefficient denominators and canonicalizes back into the ring.
    pub fn from_rational_function(rf: &RationalFunction<BigRational>) -> Result<Self, K0Error> {
        let scale = common_denominator(rf.num()).lcm(&common_denominator(rf.den()));
        let to_int = |p: &Poly<BigRational>| {
            p.map(|c| {
                let scaled = c * BigRational::from_integer(scale.clone());
                debug_assert!(scaled.is_integer());
                scaled.to_integer()
            })
        };
        Self::normalize(to_int(rf.num()), to_int(rf.den()))
    }
}

fn common_denominator(p: &Poly<BigRational>) -> BigInt {
    p.coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
}

fn poly_content(p: &Poly<BigInt>) -> BigInt {
    p.coeffs()
        .iter()
        .fold(BigInt::zero(), |acc, c| acc.gcd(c))
}

fn l_pow_minus_one(n: usize) -> Poly<BigInt> {
    Poly::monomial(BigInt::one(), n).sub(&Poly::one())
}

/// Lazily memoized cyclotomic polynomials, computed by exact division of
/// `L^d - 1` by the lower-index cyclotomics.
struct CycloTable {
    polys: BTreeMap<usize, Poly<BigInt>>,
}

impl CycloTable {
    fn new() -> Self {
        CycloTable {
            polys: BTreeMap::new(),
        }
    }

    fn get(&mut self, d: usize) -> &Poly<BigInt> {
        if !self.polys.contains_key(&d) {
            let mut p = l_pow_minus_one(d);
            for e in 1..d {
                if d % e == 0 {
                    let phi_e = self.get(e).clone();
                    p = p.exact_div(&phi_e).expect("cyclotomic division is exact");
                }
            }
            self.polys.insert(d, p);
        }
        self.polys.get(&d).expect("just inserted")
    }
}

fn euler_phi(n: usize) -> usize {
    let mut rest = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= rest {
        if rest % p == 0 {
            while rest % p == 0 {
                rest /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if rest > 1 {
        result -= result / rest;
    }
    result
}

impl crate::exactalg::CoeffRing for K0Element {
    fn zero() -> Self {
        K0Element::zero()
    }
    fn one() -> Self {
        K0Element::one()
    }
    fn is_zero(&self) -> bool {
        K0Element::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        K0Element::add(self, rhs)
    }
    fn neg(&self) -> Self {
        K0Element::neg(self)
    }
    fn mul(&self, rhs: &Self) -> Self {
        K0Element::mul(self, rhs)
    }
    fn try_inv(&self) -> Option<Self> {
        K0Element::try_inv(self)
    }
    fn try_div(&self, rhs: &Self) -> Option<Self> {
        rhs.try_inv().map(|i| self.mul(&i))
    }
    fn from_i64(v: i64) -> Self {
        K0Element::from_int(v)
    }
}

impl fmt::Display for K0Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num_str = self.num.display("L");
        if self.l_pow == 0 && self.s_factors.is_empty() {
            return write!(f, "{num_str}");
        }
        let mut factors: Vec<String> = Vec::new();
        if self.l_pow == 1 {
            factors.push("L".into());
        } else if self.l_pow > 1 {
            factors.push(format!("L^{}", self.l_pow));
        }
        for (&n, &m) in &self.s_factors {
            let base = format!("({})", l_pow_minus_one(n as usize).display("L"));
            if m == 1 {
                factors.push(base);
            } else {
                factors.push(format!("{base}^{m}"));
            }
        }
        let den_str = if factors.len() == 1 {
            factors.pop().expect("nonempty")
        } else {
            format!("({})", factors.join("*"))
        };
        let single_term = self.num.coeffs().iter().filter(|c| !c.is_zero()).count() == 1;
        if single_term {
            write!(f, "{num_str} / {den_str}")
        } else {
            write!(f, "({num_str}) / {den_str}")
        }
    }
}

impl fmt::Debug for K0Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A truncated expansion `sum coeffs[k] * L^-(leading+k)`; `leading` may be
/// negative, in which case the head terms are positive powers of `L`.
#[derive(Clone, PartialEq, Eq)]
pub struct LInvSeries {
    pub leading: i64,
    pub coeffs: Vec<BigInt>,
}

impl LInvSeries {
    /// Coefficient of `L^-k`.
    pub fn coeff(&self, k: i64) -> BigInt {
        let idx = k - self.leading;
        if idx < 0 || idx as usize >= self.coeffs.len() {
            BigInt::zero()
        } else {
            self.coeffs[idx as usize].clone()
        }
    }

    /// Evaluates the truncation at `L = q`.
    pub fn eval(&self, q: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            let e = self.leading + k as i64;
            let term = BigRational::from_integer(c.clone())
                * pow_rational(q, -e);
            acc += term;
        }
        acc
    }
}

fn pow_rational(q: &BigRational, e: i64) -> BigRational {
    let mut acc = BigRational::one();
    let base = if e < 0 { q.recip() } else { q.clone() };
    for _ in 0..e.unsigned_abs() {
        acc *= base.clone();
    }
    acc
}

impl fmt::Display for LInvSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = self.leading + k as i64;
            let mag = c.abs();
            let var_part = match e.cmp(&0) {
                std::cmp::Ordering::Greater => format!("L^-{e}"),
                std::cmp::Ordering::Equal => "1".into(),
                std::cmp::Ordering::Less => {
                    if e == -1 {
                        "L".into()
                    } else {
                        format!("L^{}", -e)
                    }
                }
            };
            let term = if mag.is_one() && e != 0 {
                var_part
            } else if e == 0 {
                format!("{mag}")
            } else {
                format!("{mag}*{var_part}")
            };
            if first {
                if c.is_negative() {
                    write!(f, "-{term}")?;
                } else {
                    write!(f, "{term}")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - {term}")?;
            } else {
                write!(f, " + {term}")?;
            }
        }
        let tail = self.leading + self.coeffs.len() as i64;
        if first {
            write!(f, "0 + O(L^-{tail})")
        } else {
            write!(f, " + O(L^-{tail})")
        }
    }
}

/// The class of `GL_n`: `(L^n - 1)(L^n - L)...(L^n - L^(n-1))`.
pub fn class_gl(n: u32) -> K0Element {
    assert!(n >= 1, "GL_n needs n >= 1");
    let mut p = Poly::one();
    let ln = Poly::monomial(BigInt::one(), n as usize);
    for i in 0..n {
        p = p.mul(&ln.sub(&Poly::monomial(BigInt::one(), i as usize)));
    }
    K0Element::from_poly(p)
}

/// The class of `SL_n = GL_n / G_m`.
pub fn class_sl(n: u32) -> K0Element {
    let gm = l_pow_minus_one(1);
    let q = class_gl(n)
        .num()
        .exact_div(&gm)
        .expect("(L - 1) divides [GL_n]");
    K0Element::from_poly(q)
}

/// The class of symmetric bilinear forms of rank `r` in `n` variables:
/// `prod_{i=1..s} L^(2i)/(L^(2i)-1) * prod_{i=0..e}(L^(n-i)-1)` where
/// `s = floor(r/2)` and `e = 2s-1` for even `r`, `e = 2s` for odd `r`.
pub fn class_sym_rank(n: u32, r: u32) -> Result<K0Element, K0Error> {
    if r > n {
        return Err(K0Error::Invalid(format!(
            "rank {r} exceeds the number of variables {n}"
        )));
    }
    let s = r / 2;
    let mut num = Poly::one();
    let mut den = Poly::one();
    for i in 1..=s {
        num = num.mul(&Poly::monomial(BigInt::one(), 2 * i as usize));
        den = den.mul(&l_pow_minus_one(2 * i as usize));
    }
    let upper = if r % 2 == 0 {
        2 * s as i64 - 1
    } else {
        2 * s as i64
    };
    for i in 0..=upper {
        num = num.mul(&l_pow_minus_one((n as i64 - i) as usize));
    }
    K0Element::normalize(num, den)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(v: &[i64]) -> Poly<BigInt> {
        Poly::new(v.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn canonical_form_of_inverse_l_cubed_minus_l() {
        let x = K0Element::normalize(ip(&[1]), ip(&[0, -1, 0, 1])).unwrap();
        assert_eq!(x.num(), &Poly::one());
        assert_eq!(x.denominator_l_pow(), 1);
        assert_eq!(x.denominator_factors(), &BTreeMap::from([(2, 1)]));
        assert_eq!(x.to_string(), "1 / (L*(L^2 - 1))");
    }

    #[test]
    fn cyclotomic_deficits_move_to_numerator() {
        // 1/(L+1) = (L-1)/(L^2-1)
        let x = K0Element::normalize(ip(&[1]), ip(&[1, 1])).unwrap();
        assert_eq!(x.num(), &ip(&[-1, 1]));
        assert_eq!(x.denominator_factors(), &BTreeMap::from([(2, 1)]));
        // 1/(L^2+1) = (L^2-1)/(L^4-1)
        let y = K0Element::normalize(ip(&[1]), ip(&[1, 0, 1])).unwrap();
        assert_eq!(y.num(), &ip(&[-1, 0, 1]));
        assert_eq!(y.denominator_factors(), &BTreeMap::from([(4, 1)]));
    }

    #[test]
    fn non_localizable_denominators_are_rejected() {
        assert!(matches!(
            K0Element::normalize(ip(&[1]), ip(&[2, 1])),
            Err(K0Error::NotInLocalization(_))
        ));
        // content 2 cannot cancel
        assert!(matches!(
            K0Element::normalize(ip(&[1]), ip(&[-2, 2])),
            Err(K0Error::NotInLocalization(_))
        ));
        // but 2/(2L-2) reduces fine
        let x = K0Element::normalize(ip(&[2]), ip(&[-2, 2])).unwrap();
        assert_eq!(x.to_string(), "1 / (L - 1)");
    }

    #[test]
    fn field_like_identities() {
        let gl2 = class_gl(2);
        assert_eq!(gl2.num(), &ip(&[0, 1, -1, -1, 1]));
        let inv = gl2.inv().unwrap();
        assert_eq!(gl2.mul(&inv), K0Element::one());
        let a = K0Element::normalize(ip(&[1]), ip(&[-1, 1])).unwrap();
        let sum = a.add(&K0Element::one());
        // 1/(L-1) + 1 = L/(L-1)
        assert_eq!(sum.num(), &ip(&[0, 1]));
        assert_eq!(sum.denominator_factors(), &BTreeMap::from([(1, 1)]));
    }

    #[test]
    fn specialization_counts_matrix_groups() {
        assert_eq!(class_gl(2).specialize_int(2).unwrap(), num::BigRational::from_integer(6.into()));
        assert_eq!(class_gl(2).specialize_int(3).unwrap(), num::BigRational::from_integer(48.into()));
        assert_eq!(class_sl(2).specialize_int(2).unwrap(), num::BigRational::from_integer(6.into()));
        let pole = K0Element::normalize(ip(&[1]), ip(&[-1, 1])).unwrap();
        assert!(matches!(pole.specialize_int(1), Err(K0Error::Pole(_))));
    }

    #[test]
    fn sym_rank_examples() {
        assert_eq!(class_sym_rank(3, 0).unwrap(), K0Element::one());
        assert_eq!(class_sym_rank(1, 1).unwrap().num(), &ip(&[-1, 1]));
        let r1 = class_sym_rank(2, 1).unwrap();
        assert_eq!(r1.num(), &ip(&[-1, 0, 1]));
        assert_eq!(r1.specialize_int(3).unwrap(), num::BigRational::from_integer(8.into()));
        // full-rank binary forms: L^2(L-1)
        assert_eq!(class_sym_rank(2, 2).unwrap().num(), &ip(&[0, 0, -1, 1]));
        assert!(class_sym_rank(2, 3).is_err());
    }

    #[test]
    fn l_inverse_expansions() {
        let bsl2 = class_sl(2).inv().unwrap();
        let s = bsl2.expand_l_inverse(8);
        assert_eq!(s.leading, 3);
        assert_eq!(
            s.coeffs,
            vec![1, 0, 1, 0, 1, 0, 1, 0, 1]
                .into_iter()
                .map(BigInt::from)
                .collect::<Vec<_>>()
        );
        assert_eq!(s.to_string(), "L^-3 + L^-5 + L^-7 + L^-9 + L^-11 + O(L^-12)");
        let bgm = K0Element::normalize(ip(&[1]), ip(&[-1, 1])).unwrap();
        let t = bgm.expand_l_inverse(4);
        assert_eq!(t.leading, 1);
        assert_eq!(t.coeffs, vec![BigInt::one(); 5]);
        // a polynomial class expands with negative leading exponent
        let g = class_sl(2).expand_l_inverse(4);
        assert_eq!(g.leading, -3);
        assert_eq!(g.coeff(-3), BigInt::one());
        assert_eq!(g.coeff(-1), BigInt::from(-1));
    }

    #[test]
    fn rational_function_roundtrip() {
        for x in [
            class_gl(3),
            class_sym_rank(4, 3).unwrap(),
            K0Element::normalize(ip(&[1, 2]), ip(&[0, 0, -1, 0, 0, 1])).unwrap(),
        ] {
            let rf = x.to_rational_function();
            assert_eq!(K0Element::from_rational_function(&rf).unwrap(), x);
        }
    }

    #[test]
    fn laurent_view() {
        let x = K0Element::l_pow_class(-2).add(&K0Element::from_int(3));
        let m = x.as_laurent().unwrap();
        assert_eq!(m, BTreeMap::from([(-2, BigInt::one()), (0, BigInt::from(3))]));
        assert_eq!(class_sl(2).inv().unwrap().as_laurent(), None);
    }
}
