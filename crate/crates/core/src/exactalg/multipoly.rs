//! Sparse multivariate polynomials with integer coefficients.

use num::{BigInt, One, Signed, Zero};
use std::collections::BTreeMap;

/// Exponent vector with graded-lex ordering (total degree first, then
/// lexicographic with the first variable strongest).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            // within a degree block, x1^a earlier exponents dominate:
            // larger exponent on an earlier variable sorts *later* here so
            // that reverse iteration yields canonical descending graded-lex
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial over the integers in variables
/// `x1..x<nvars>`. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Debug)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: BigInt) -> Self {
        let mut p = MultiPoly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(Monomial(vec![0; nvars]), c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        MultiPoly::constant(nvars, BigInt::one())
    }

    /// The variable `x<i>` (0-based index).
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index out of range");
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = MultiPoly::zero(nvars);
        p.terms.insert(Monomial(e), BigInt::one());
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<u32>, BigInt)>) -> Self {
        let mut p = MultiPoly::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent vector length mismatch");
            p.add_term(Monomial(e), c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = MultiPoly::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let e: Vec<u32> = ma.0.iter().zip(&mb.0).map(|(a, b)| a + b).collect();
                out.add_term(Monomial(e), ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.total_degree()).max()
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.0[var]).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.total_degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Degree at most one in every variable.
    pub fn is_multilinear(&self) -> bool {
        self.terms.keys().all(|m| m.0.iter().all(|&e| e <= 1))
    }

    pub fn eval_bigint(&self, xs: &[BigInt]) -> BigInt {
        assert_eq!(xs.len(), self.nvars);
        let mut acc = BigInt::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    t *= &xs[i];
                }
            }
            acc += t;
        }
        acc
    }

    /// Evaluation over the prime field `F_p` for small `p`.
    pub fn eval_mod(&self, xs: &[u64], p: u64) -> u64 {
        assert_eq!(xs.len(), self.nvars);
        let mut acc: u64 = 0;
        for (m, c) in &self.terms {
            let mut t = modulo_bigint(c, p);
            for (i, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    t = t * (xs[i] % p) % p;
                }
            }
            acc = (acc + t) % p;
        }
        acc
    }

    /// Substitutes `value` for variable `var`, keeping the variable count
    /// (the variable simply no longer occurs).
    pub fn substitute(&self, var: usize, value: &BigInt) -> Self {
        let mut out = MultiPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            let k = e[var];
            e[var] = 0;
            let mut coeff = c.clone();
            for _ in 0..k {
                coeff *= value;
            }
            out.add_term(Monomial(e), coeff);
        }
        out
    }

    /// Re-indexes into `nvars + 1` variables with a fresh unused variable at
    /// position `pos`.
    pub fn insert_var(&self, pos: usize) -> Self {
        assert!(pos <= self.nvars);
        let mut out = MultiPoly::zero(self.nvars + 1);
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            e.insert(pos, 0);
            out.add_term(Monomial(e), c.clone());
        }
        out
    }

    /// Exact division by the variable `var`; `None` if some term lacks it.
    pub fn divide_by_var(&self, var: usize) -> Option<Self> {
        let mut out = MultiPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            if m.0[var] == 0 {
                return None;
            }
            let mut e = m.0.clone();
            e[var] -= 1;
            out.add_term(Monomial(e), c.clone());
        }
        Some(out)
    }

    /// Canonical text form: descending graded-lex order, `c*x1^a1*...` terms,
    /// unit coefficients and unit exponents omitted.
    pub fn to_canonical_string(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() || m.total_degree() == 0 {
                factors.push(mag.to_string());
            }
            for (i, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(format!("x{}", i + 1)),
                    _ => factors.push(format!("x{}^{}", i + 1, e)),
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

fn modulo_bigint(c: &BigInt, p: u64) -> u64 {
    use num::ToPrimitive;
    let r = c % BigInt::from(p);
    let r = if r.is_negative() { r + BigInt::from(p) } else { r };
    r.to_u64().unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: usize, i: usize) -> MultiPoly {
        MultiPoly::var(n, i)
    }

    #[test]
    fn canonical_string_graded_lex() {
        // x1*x2 + x3^2 + x1 + 2 over three variables
        let n = 3;
        let p = x(n, 0)
            .mul(&x(n, 1))
            .add(&x(n, 2).mul(&x(n, 2)))
            .add(&x(n, 0))
            .add(&MultiPoly::constant(n, BigInt::from(2)));
        assert_eq!(p.to_canonical_string(), "x1*x2 + x3^2 + x1 + 2");
    }

    #[test]
    fn homogeneity_and_multilinearity() {
        let n = 3;
        let sym = x(n, 0).mul(&x(n, 1)).add(&x(n, 0).mul(&x(n, 2))).add(&x(n, 1).mul(&x(n, 2)));
        assert!(sym.is_homogeneous());
        assert!(sym.is_multilinear());
        assert_eq!(sym.total_degree(), Some(2));
        let q = sym.add(&x(n, 0));
        assert!(!q.is_homogeneous());
    }

    #[test]
    fn eval_mod_small() {
        let n = 2;
        let p = x(n, 0).mul(&x(n, 1)).add(&MultiPoly::constant(n, BigInt::from(-1)));
        assert_eq!(p.eval_mod(&[2, 3], 5), 0); // 6 - 1 = 5
        assert_eq!(p.eval_mod(&[1, 1], 5), 0);
        assert_eq!(p.eval_mod(&[2, 2], 5), 3);
    }

    #[test]
    fn substitution_drops_variable() {
        let n = 2;
        let p = x(n, 0).mul(&x(n, 1)).add(&x(n, 1));
        let q = p.substitute(1, &BigInt::from(1));
        assert_eq!(q, x(n, 0).add(&MultiPoly::one(n)));
    }
}
