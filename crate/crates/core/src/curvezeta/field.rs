//! Finite fields 𝔽_{p^n} with deterministic defining moduli.
//!
//! The modulus of 𝔽_{p^n} is always the lexicographically smallest monic
//! irreducible of degree n over 𝔽_p (reading a candidate x^n + Σ cᵢxⁱ as the
//! base-p numeral c_{n-1}…c₀), so every count downstream is reproducible
//! bit-for-bit. Constructed fields are cached process-wide.

use crate::budget::{self, BudgetError};
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error(transparent)]
    Budget(#[from] BudgetError),
}

/// An element of 𝔽_{p^n}: `n` coefficients in `0..p`, constant term first.
pub type FqElem = Vec<u64>;

/// 𝔽_{p^n} presented as 𝔽_p[x] modulo a fixed monic irreducible.
#[derive(Debug, PartialEq, Eq)]
pub struct FiniteField {
    p: u64,
    n: usize,
    modulus: Vec<u64>,
}

/// Builds (or fetches from the cache) the field with p^n elements.
pub fn field_make(p: u64, n: usize) -> Result<Arc<FiniteField>, FieldError> {
    if !crate::graphzeta::is_prime(p) {
        return Err(FieldError::NotPrime(p));
    }
    if n == 0 {
        return Err(FieldError::ZeroDegree);
    }
    let size = (p as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    budget::check(size)?;
    static CACHE: OnceLock<Mutex<BTreeMap<(u64, usize), Arc<FiniteField>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(BTreeMap::new()));
    let mut table = cache.lock().expect("field cache poisoned");
    if let Some(f) = table.get(&(p, n)) {
        return Ok(Arc::clone(f));
    }
    let field = Arc::new(FiniteField {
        p,
        n,
        modulus: smallest_irreducible(p, n),
    });
    table.insert((p, n), Arc::clone(&field));
    Ok(field)
}

/// Scans monic degree-n polynomials in base-p numeral order for the first
/// irreducible one.
fn smallest_irreducible(p: u64, n: usize) -> Vec<u64> {
    let mut low = vec![0u64; n];
    loop {
        let mut f = low.clone();
        f.push(1);
        if is_irreducible(&f, p) {
            return f;
        }
        for digit in low.iter_mut() {
            *digit += 1;
            if *digit < p {
                break;
            }
            *digit = 0;
        }
    }
}

/// Rabin's criterion: monic f of degree n is irreducible over 𝔽_p iff
/// x^{p^n} ≡ x (mod f) and gcd(x^{p^{n/ℓ}} − x, f) = 1 for every prime ℓ | n.
fn is_irreducible(f: &[u64], p: u64) -> bool {
    let n = f.len() - 1;
    if n == 1 {
        return true;
    }
    // frob[k] = x^{p^k} mod f, built by iterated p-th powering.
    let mut frob: Vec<Vec<u64>> = Vec::with_capacity(n + 1);
    frob.push(vec![0, 1]); // x
    for _ in 1..=n {
        let prev = frob.last().expect("seeded");
        frob.push(poly_powmod(prev, p as u128, f, p));
    }
    let x = poly_trim(&[0, 1]);
    if !poly_sub(&frob[n], &x, p).is_empty() {
        return false;
    }
    let mut m = n;
    let mut ell = 2;
    let mut prime_factors = Vec::new();
    while ell * ell <= m {
        if m % ell == 0 {
            prime_factors.push(ell);
            while m % ell == 0 {
                m /= ell;
            }
        }
        ell += 1;
    }
    if m > 1 {
        prime_factors.push(m);
    }
    for ell in prime_factors {
        let diff = poly_sub(&frob[n / ell], &x, p);
        let g = poly_gcd(&diff, f, p);
        if g.len() > 1 {
            return false;
        }
    }
    true
}

// --- dense 𝔽_p[x] helpers (little-endian coefficient vectors) ---

fn poly_trim(a: &[u64]) -> Vec<u64> {
    let mut v = a.to_vec();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn poly_sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0u64; a.len().max(b.len())];
    for (i, slot) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *slot = (x + p - y) % p;
    }
    poly_trim(&out)
}

fn poly_mulmod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    let n = f.len() - 1;
    let mut prod = vec![0u128; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + (x as u128) * (y as u128)) % (p as u128);
        }
    }
    // reduce by the monic f from the top down
    for i in (n..prod.len()).rev() {
        let c = prod[i] % p as u128;
        if c == 0 {
            continue;
        }
        prod[i] = 0;
        for j in 0..n {
            let sub = (c * (f[j] as u128)) % p as u128;
            prod[i - n + j] = (prod[i - n + j] + p as u128 - sub) % p as u128;
        }
    }
    poly_trim(&prod.iter().take(n).map(|&c| c as u64).collect::<Vec<_>>())
}

fn poly_powmod(base: &[u64], e: u128, f: &[u64], p: u64) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut b = base.to_vec();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_mulmod(&acc, &b, f, p);
        }
        b = poly_mulmod(&b, &b, f, p);
        e >>= 1;
    }
    acc
}

fn modinv(a: u64, p: u64) -> u64 {
    // Fermat: a^{p-2}; p is prime and a ≠ 0 mod p.
    let mut acc: u128 = 1;
    let mut b: u128 = (a % p) as u128;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p as u128;
        }
        b = b * b % p as u128;
        e >>= 1;
    }
    acc as u64
}

fn poly_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = poly_trim(a);
    let mut b = poly_trim(b);
    while !b.is_empty() {
        // a mod b
        let lead_inv = modinv(*b.last().expect("nonempty"), p);
        while a.len() >= b.len() && !a.is_empty() {
            let shift = a.len() - b.len();
            let c = (*a.last().expect("nonempty") as u128 * lead_inv as u128 % p as u128) as u64;
            for (j, &bj) in b.iter().enumerate() {
                let sub = (c as u128 * bj as u128 % p as u128) as u64;
                a[shift + j] = (a[shift + j] + p - sub) % p;
            }
            a = poly_trim(&a);
        }
        std::mem::swap(&mut a, &mut b);
    }
    if let Some(&lead) = a.last() {
        let inv = modinv(lead, p);
        for c in a.iter_mut() {
            *c = (*c as u128 * inv as u128 % p as u128) as u64;
        }
    }
    a
}

impl FiniteField {
    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    /// Field size p^n.
    pub fn q(&self) -> u128 {
        (self.p as u128).pow(self.n as u32)
    }

    /// Defining modulus, constant term first, length n+1, monic.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn zero(&self) -> FqElem {
        vec![0; self.n]
    }

    pub fn one(&self) -> FqElem {
        self.from_u64(1)
    }

    /// Embeds an integer through 𝔽_p ⊂ 𝔽_{p^n}.
    pub fn from_u64(&self, c: u64) -> FqElem {
        let mut e = vec![0; self.n];
        e[0] = c % self.p;
        e
    }

    /// Embeds a signed integer (reduces mod p first).
    pub fn from_i64(&self, c: i64) -> FqElem {
        self.from_u64(c.rem_euclid(self.p as i64) as u64)
    }

    pub fn is_zero(&self, a: &FqElem) -> bool {
        a.iter().all(|&c| c == 0)
    }

    pub fn add(&self, a: &FqElem, b: &FqElem) -> FqElem {
        a.iter().zip(b).map(|(&x, &y)| (x + y) % self.p).collect()
    }

    pub fn sub(&self, a: &FqElem, b: &FqElem) -> FqElem {
        a.iter()
            .zip(b)
            .map(|(&x, &y)| (x + self.p - y) % self.p)
            .collect()
    }

    pub fn neg(&self, a: &FqElem) -> FqElem {
        a.iter().map(|&x| (self.p - x) % self.p).collect()
    }

    pub fn mul(&self, a: &FqElem, b: &FqElem) -> FqElem {
        let mut r = poly_mulmod(a, b, &self.modulus, self.p);
        r.resize(self.n, 0);
        r
    }

    pub fn pow(&self, a: &FqElem, e: u128) -> FqElem {
        let mut r = poly_powmod(a, e, &self.modulus, self.p);
        r.resize(self.n, 0);
        r
    }

    /// Multiplicative inverse of a nonzero element, via a^{q-2}.
    pub fn inv(&self, a: &FqElem) -> FqElem {
        assert!(!self.is_zero(a), "inverting zero");
        self.pow(a, self.q() - 2)
    }

    /// The arithmetic Frobenius a ↦ a^p.
    pub fn frobenius(&self, a: &FqElem) -> FqElem {
        self.pow(a, self.p as u128)
    }

    /// Evaluates a polynomial with coefficients in the field (Horner).
    pub fn eval_poly(&self, coeffs: &[FqElem], x: &FqElem) -> FqElem {
        let mut acc = self.zero();
        for c in coeffs.iter().rev() {
            acc = self.add(&self.mul(&acc, x), c);
        }
        acc
    }

    /// Iterates over all q elements in base-p numeral order.
    pub fn elements(&self) -> impl Iterator<Item = FqElem> + '_ {
        let mut cur = Some(self.zero());
        std::iter::from_fn(move || {
            let out = cur.clone()?;
            let mut next = out.clone();
            let mut carried = true;
            for digit in next.iter_mut() {
                *digit += 1;
                if *digit < self.p {
                    carried = false;
                    break;
                }
                *digit = 0;
            }
            cur = if carried { None } else { Some(next) };
            Some(out)
        })
    }

    /// For each c, the number of y with y² = c (used for hyperelliptic
    /// counting); missing keys mean zero solutions.
    pub fn square_counts(&self) -> HashMap<FqElem, u64> {
        let mut map = HashMap::new();
        for y in self.elements() {
            *map.entry(self.mul(&y, &y)).or_insert(0) += 1;
        }
        map
    }
}
