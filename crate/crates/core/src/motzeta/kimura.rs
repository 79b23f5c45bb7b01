//! Kimura-finite motive symbols.
//!
//! An object is an even part — a virtual sum of Lefschetz powers — plus a
//! list of opaque odd generators. An odd generator carries nothing but its
//! rank and its zeta polynomial (for a curve symbol, the degree-2g numerator
//! with Grothendieck-ring coefficients); symmetric powers beyond the rank
//! vanish, which is exactly what makes the zeta of the whole object
//! rational. Generators with odd-dimensional or exotic determinants are
//! rejected rather than guessed at.

use crate::exactalg::{BigInt, CoeffRing, Poly};
use crate::k0ring::{K0Element, MixedTateClass};
use serde::Deserialize;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum MotiveError {
    #[error("invalid motive: {0}")]
    Invalid(String),
    #[error("json: {0}")]
    Json(String),
    #[error("cannot parse term '{0}'")]
    Term(String),
    #[error("the symbol 'a' is only available through the symbolic loader")]
    SymbolicCoefficient,
    #[error("t = L^-{0} is a pole (the even part contains L^{0})")]
    Pole(u32),
}

/// Coefficient rings into which Grothendieck-ring classes embed. The zeta
/// and functional-equation machinery is generic over this, so the same code
/// runs with concrete coefficients or with one free symbol adjoined.
pub trait K0Coeff: CoeffRing {
    fn embed(c: K0Element) -> Self;
}

impl K0Coeff for K0Element {
    fn embed(c: K0Element) -> Self {
        c
    }
}

/// Polynomials in a free symbol `a` over the Grothendieck ring.
pub type APoly = Poly<K0Element>;

impl K0Coeff for APoly {
    fn embed(c: K0Element) -> Self {
        Poly::constant(c)
    }
}

/// The free symbol of the symbolic coefficient ring.
pub fn a_symbol() -> APoly {
    Poly::var()
}

/// An opaque odd generator: a curve-type symbol of rank 2g whose zeta
/// polynomial has constant term 1 and degree equal to the rank.
#[derive(Clone, PartialEq)]
pub struct OddGenerator<R: K0Coeff> {
    rank: usize,
    numerator: Poly<R>,
}

impl<R: K0Coeff> std::fmt::Debug for OddGenerator<R> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("OddGenerator")
            .field("rank", &self.rank)
            .field("numerator", &self.numerator.coeffs())
            .finish()
    }
}

impl<R: K0Coeff> OddGenerator<R> {
    pub fn curve_symbol(numerator: Poly<R>) -> Result<Self, MotiveError> {
        let deg = numerator
            .degree()
            .ok_or_else(|| MotiveError::Invalid("zeta polynomial must be nonzero".into()))?;
        if deg == 0 || deg % 2 != 0 {
            return Err(MotiveError::Invalid(format!(
                "curve symbols have even positive rank, got degree {deg}"
            )));
        }
        if numerator.coeff(0) != R::one() {
            return Err(MotiveError::Invalid(
                "zeta polynomial must have constant term 1".into(),
            ));
        }
        Ok(OddGenerator {
            rank: deg,
            numerator,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn genus(&self) -> usize {
        self.rank / 2
    }

    pub fn numerator(&self) -> &Poly<R> {
        &self.numerator
    }

    /// The dual generator h¹ ⊗ 𝕃^{-1}: the t^i coefficient picks up 𝕃^{-i}.
    pub fn dual(&self) -> Self {
        let coeffs = self
            .numerator
            .coeffs()
            .iter()
            .enumerate()
            .map(|(i, c)| c.mul(&R::embed(K0Element::l_pow_class(-(i as i64)))))
            .collect();
        OddGenerator {
            rank: self.rank,
            numerator: Poly::new(coeffs),
        }
    }
}

/// A Kimura-finite object M = M₊ ⊕ M₋.
#[derive(Clone, PartialEq)]
pub struct KimuraObject<R: K0Coeff = K0Element> {
    plus: MixedTateClass,
    odd: Vec<OddGenerator<R>>,
}

impl<R: K0Coeff> std::fmt::Debug for KimuraObject<R> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("KimuraObject")
            .field("plus", &self.plus)
            .field("odd", &self.odd)
            .finish()
    }
}

impl<R: K0Coeff> KimuraObject<R> {
    pub fn new(plus: MixedTateClass, odd: Vec<OddGenerator<R>>) -> Self {
        KimuraObject { plus, odd }
    }

    /// The unit motive 𝟙.
    pub fn unit() -> Self {
        Self::from_plus(MixedTateClass::one())
    }

    /// The Lefschetz power 𝕃^m.
    pub fn lefschetz(m: i64) -> Self {
        Self::from_plus(MixedTateClass::from_pairs(&[(m, 1)]))
    }

    /// h(ℙⁿ) = 𝟙 ⊕ 𝕃 ⊕ … ⊕ 𝕃ⁿ.
    pub fn projective_space(n: u32) -> Self {
        Self::from_plus(crate::k0ring::class_projective_space(n))
    }

    pub fn from_plus(plus: MixedTateClass) -> Self {
        KimuraObject { plus, odd: vec![] }
    }

    /// h(X) of a curve of genus g: 𝟙 ⊕ h¹ ⊕ 𝕃 with the given degree-2g
    /// numerator.
    pub fn curve(numerator: Poly<R>) -> Result<Self, MotiveError> {
        Ok(KimuraObject {
            plus: MixedTateClass::from_pairs(&[(0, 1), (1, 1)]),
            odd: vec![OddGenerator::curve_symbol(numerator)?],
        })
    }

    /// h(E) of an elliptic curve with numerator 1 − a·t + 𝕃t².
    pub fn elliptic(a: R) -> Self {
        let numerator = Poly::new(vec![R::one(), a.neg(), R::embed(K0Element::l())]);
        Self::curve(numerator).expect("elliptic numerator is valid")
    }

    pub fn plus(&self) -> &MixedTateClass {
        &self.plus
    }

    pub fn odd(&self) -> &[OddGenerator<R>] {
        &self.odd
    }

    pub fn chi_plus(&self) -> BigInt {
        self.plus.euler_characteristic()
    }

    pub fn chi_minus(&self) -> BigInt {
        -self
            .odd
            .iter()
            .map(|g| BigInt::from(g.rank() as i64))
            .sum::<BigInt>()
    }

    pub fn chi(&self) -> BigInt {
        self.chi_plus() + self.chi_minus()
    }

    /// det M = ⋀^{χ₊}M₊ ⊗ (S^{-χ₋}M₋)^{-1}: the top exterior power of the
    /// even part is 𝕃^{Σ m·aₘ}, and the top super-symmetric power of a
    /// curve symbol is its determinant 𝕃^g.
    pub fn det_class(&self) -> K0Element {
        let mut e = BigInt::from(0);
        for (&m, a) in self.plus.terms() {
            e += BigInt::from(m) * a;
        }
        for g in &self.odd {
            e -= BigInt::from(g.genus() as i64);
        }
        let e = i64::try_from(&e).expect("determinant exponent fits i64");
        K0Element::l_pow_class(e)
    }

    pub fn direct_sum(&self, rhs: &Self) -> Self {
        let mut odd = self.odd.clone();
        odd.extend(rhs.odd.iter().cloned());
        KimuraObject {
            plus: self.plus.add(&rhs.plus),
            odd,
        }
    }

    /// The dual object: 𝕃^m ↦ 𝕃^{-m} on the even part, h¹ ↦ h¹ ⊗ 𝕃^{-1} on
    /// the odd generators.
    pub fn dual(&self) -> Self {
        let plus = MixedTateClass::new(
            self.plus
                .terms()
                .iter()
                .map(|(&m, a)| (-m, a.clone()))
                .collect(),
        );
        KimuraObject {
            plus,
            odd: self.odd.iter().map(OddGenerator::dual).collect(),
        }
    }
}

#[derive(Debug, Deserialize)]
struct KimuraFile {
    plus: BTreeMap<String, i64>,
    #[serde(default)]
    odd: Vec<OddFile>,
}

#[derive(Debug, Deserialize)]
struct OddFile {
    rank: usize,
    numerator: Vec<String>,
}

fn parse_file<R: K0Coeff>(
    s: &str,
    a: Option<&R>,
) -> Result<KimuraObject<R>, MotiveError> {
    let file: KimuraFile =
        serde_json::from_str(s).map_err(|e| MotiveError::Json(e.to_string()))?;
    let mut pairs = Vec::new();
    for (key, mult) in &file.plus {
        let m: i64 = key
            .parse()
            .map_err(|_| MotiveError::Json(format!("bad Lefschetz exponent '{key}'")))?;
        pairs.push((m, *mult));
    }
    let mut odd = Vec::new();
    for of in &file.odd {
        let mut numerator = Poly::zero();
        for term in &of.numerator {
            let (coeff, tpow) = parse_term(term, a)?;
            numerator = numerator.add(&Poly::monomial(coeff, tpow));
        }
        let generator = OddGenerator::curve_symbol(numerator)?;
        if generator.rank() != of.rank {
            return Err(MotiveError::Invalid(format!(
                "declared rank {} but the zeta polynomial has degree {}",
                of.rank,
                generator.rank()
            )));
        }
        odd.push(generator);
    }
    Ok(KimuraObject::new(MixedTateClass::from_pairs(&pairs), odd))
}

impl KimuraObject<K0Element> {
    /// Loads the JSON form with concrete coefficients; the symbol `a` is
    /// rejected here.
    pub fn from_json_str(s: &str) -> Result<Self, MotiveError> {
        parse_file(s, None)
    }
}

impl KimuraObject<APoly> {
    /// Loads the JSON form allowing the free symbol `a` in numerators.
    pub fn from_json_str_symbolic(s: &str) -> Result<Self, MotiveError> {
        parse_file(s, Some(&a_symbol()))
    }
}

/// Parses one additive term like `1`, `-a*t`, `L*t^2`, `3*L^-1*t^4` into a
/// coefficient and a power of t.
fn parse_term<R: K0Coeff>(s: &str, a: Option<&R>) -> Result<(R, usize), MotiveError> {
    let s = s.trim();
    let (negative, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    if body.trim().is_empty() {
        return Err(MotiveError::Term(s.into()));
    }
    let mut coeff = R::one();
    let mut tpow = 0usize;
    for atom in body.split('*') {
        let atom = atom.trim();
        let (head, exp) = match atom.split_once('^') {
            Some((h, e)) => (
                h.trim(),
                e.trim()
                    .parse::<i64>()
                    .map_err(|_| MotiveError::Term(s.into()))?,
            ),
            None => (atom, 1),
        };
        match head {
            "t" => {
                if exp < 0 {
                    return Err(MotiveError::Term(s.into()));
                }
                tpow += exp as usize;
            }
            "L" => coeff = coeff.mul(&R::embed(K0Element::l_pow_class(exp))),
            "a" => {
                let a = a.ok_or(MotiveError::SymbolicCoefficient)?;
                if exp < 0 {
                    return Err(MotiveError::Term(s.into()));
                }
                for _ in 0..exp {
                    coeff = coeff.mul(a);
                }
            }
            digits => {
                let v: i64 = digits.parse().map_err(|_| MotiveError::Term(s.into()))?;
                if exp < 0 {
                    return Err(MotiveError::Term(s.into()));
                }
                for _ in 0..exp {
                    coeff = coeff.mul(&R::from_i64(v));
                }
            }
        }
    }
    if negative {
        coeff = coeff.neg();
    }
    Ok((coeff, tpow))
}
