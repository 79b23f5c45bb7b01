//! Virtual sums of powers of the Lefschetz class, the inputs to the
//! symmetric-power operations.

use super::k0::{K0Element, K0Error};
use crate::exactalg::{BigInt, BigRational, Poly};
use num::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// A finite virtual sum `sum a_m L^m` with integer multiplicities; zero
/// multiplicities are never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct MixedTateClass {
    terms: BTreeMap<i64, BigInt>,
}

impl MixedTateClass {
    pub fn zero() -> Self {
        MixedTateClass::default()
    }

    pub fn one() -> Self {
        Self::from_pairs(&[(0, 1)])
    }

    pub fn new(terms: BTreeMap<i64, BigInt>) -> Self {
        MixedTateClass {
            terms: terms.into_iter().filter(|(_, a)| !a.is_zero()).collect(),
        }
    }

    pub fn from_pairs(pairs: &[(i64, i64)]) -> Self {
        let mut terms: BTreeMap<i64, BigInt> = BTreeMap::new();
        for &(m, a) in pairs {
            let e = terms.entry(m).or_insert_with(BigInt::zero);
            *e += BigInt::from(a);
        }
        Self::new(terms)
    }

    pub fn terms(&self) -> &BTreeMap<i64, BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of all multiplicities, i.e. the specialization at `L = 1`.
    pub fn euler_characteristic(&self) -> BigInt {
        self.terms.values().fold(BigInt::zero(), |acc, a| acc + a)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (m, a) in &rhs.terms {
            let e = terms.entry(*m).or_insert_with(BigInt::zero);
            *e += a;
        }
        Self::new(terms)
    }

    pub fn neg(&self) -> Self {
        MixedTateClass {
            terms: self.terms.iter().map(|(m, a)| (*m, -a)).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut terms: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (m, a) in &self.terms {
            for (n, b) in &rhs.terms {
                let e = terms.entry(m + n).or_insert_with(BigInt::zero);
                *e += a * b;
            }
        }
        Self::new(terms)
    }

    pub fn to_k0(&self) -> K0Element {
        let min = self.terms.keys().next().copied().unwrap_or(0).min(0);
        let mut coeffs = vec![BigInt::zero(); 0];
        for (m, a) in &self.terms {
            let idx = (m - min) as usize;
            if coeffs.len() <= idx {
                coeffs.resize(idx + 1, BigInt::zero());
            }
            coeffs[idx] = a.clone();
        }
        let num = Poly::new(coeffs);
        if min == 0 {
            K0Element::from_poly(num)
        } else {
            K0Element::l_pow_class(min)
                .mul(&K0Element::from_poly(num))
        }
    }

    pub fn from_k0(x: &K0Element) -> Option<Self> {
        x.as_laurent().map(|terms| MixedTateClass { terms })
    }

    pub fn specialize(&self, q: &BigRational) -> Result<BigRational, K0Error> {
        self.to_k0().specialize(q)
    }
}

/// `[P^n] = 1 + L + ... + L^n`.
pub fn class_projective_space(n: u32) -> MixedTateClass {
    MixedTateClass::new((0..=n as i64).map(|m| (m, BigInt::one())).collect())
}

/// `[A^n] = L^n`.
pub fn class_affine_space(n: u32) -> MixedTateClass {
    MixedTateClass::from_pairs(&[(n as i64, 1)])
}

impl fmt::Display for MixedTateClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, a) in self.terms.iter().rev() {
            let mag = a.abs();
            let var_part = match *m {
                0 => "1".to_string(),
                1 => "L".to_string(),
                m => format!("L^{m}"),
            };
            let term = if mag.is_one() && *m != 0 {
                var_part
            } else if *m == 0 {
                format!("{mag}")
            } else {
                format!("{mag}*{var_part}")
            };
            if first {
                if a.is_negative() {
                    write!(f, "-{term}")?;
                } else {
                    write!(f, "{term}")?;
                }
                first = false;
            } else if a.is_negative() {
                write!(f, " - {term}")?;
            } else {
                write!(f, " + {term}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MixedTateClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn projective_space_classes() {
        assert_eq!(class_projective_space(0), MixedTateClass::one());
        let p2 = class_projective_space(2);
        assert_eq!(p2.to_string(), "L^2 + L + 1");
        assert_eq!(
            p2.specialize(&BigRational::from_integer(3.into())).unwrap(),
            BigRational::from_integer(13.into())
        );
    }

    #[test]
    fn ring_ops_and_k0_roundtrip() {
        let a = MixedTateClass::from_pairs(&[(-1, 2), (1, 1)]);
        let b = MixedTateClass::from_pairs(&[(0, 1), (1, -1)]);
        let prod = a.mul(&b);
        // (2L^-1 + L)(1 - L) = 2L^-1 + 2... expand: 2L^-1 - 2 + L - L^2
        assert_eq!(
            prod,
            MixedTateClass::from_pairs(&[(-1, 2), (0, -2), (1, 1), (2, -1)])
        );
        let k = prod.to_k0();
        assert_eq!(MixedTateClass::from_k0(&k).unwrap(), prod);
        assert_eq!(a.sub(&a), MixedTateClass::zero());
        assert_eq!(prod.euler_characteristic(), BigInt::zero());
    }
}
