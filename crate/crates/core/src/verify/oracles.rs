//! Independent oracles for the acceptance suite.
//!
//! Each oracle recomputes a quantity along a route the production code does
//! not use: symmetric powers via Newton's identities instead of the
//! σ-operation recursion, and group orders by exhaustive matrix enumeration
//! instead of closed-form products.

use crate::exactalg::{rat, BigInt, BigRational, Poly};
use crate::k0ring::{K0Element, MixedTateClass};
use std::collections::BTreeMap;

type Laurent = BTreeMap<i64, BigRational>;

fn laurent_mul(a: &Laurent, b: &Laurent) -> Laurent {
    let mut out: Laurent = BTreeMap::new();
    for (&i, x) in a {
        for (&j, y) in b {
            let v = out.entry(i + j).or_insert_with(|| rat(0));
            *v += x * y;
        }
    }
    out
}

/// [SⁿM] for mixed-Tate M, computed over Laurent polynomials in 𝕃 with
/// rational coefficients by the Newton recursion n·hₙ = Σ pₖ·hₙ₋ₖ from the
/// power sums pₖ = Σ aₘ 𝕃^(mk). Returns h₀..h_max_n; fails if a class comes
/// out non-integral, which no mixed-Tate input can produce.
pub fn newton_symmetric_powers(
    c: &MixedTateClass,
    max_n: usize,
) -> Result<Vec<K0Element>, String> {
    let mut powers: Vec<Laurent> = Vec::new();
    for k in 1..=max_n as i64 {
        let mut p: Laurent = BTreeMap::new();
        for (&m, a) in c.terms() {
            *p.entry(m * k).or_insert_with(|| rat(0)) += BigRational::from_integer(a.clone());
        }
        powers.push(p);
    }
    let mut h: Vec<Laurent> = vec![BTreeMap::from([(0, rat(1))])];
    for n in 1..=max_n {
        let mut acc: Laurent = BTreeMap::new();
        for k in 1..=n {
            for (&e, v) in &laurent_mul(&powers[k - 1], &h[n - k]) {
                *acc.entry(e).or_insert_with(|| rat(0)) += v;
            }
        }
        let inv_n = BigRational::new(BigInt::from(1), BigInt::from(n as i64));
        h.push(acc.into_iter().map(|(e, v)| (e, v * &inv_n)).collect());
    }
    h.into_iter()
        .enumerate()
        .map(|(n, lau)| {
            let mut out = K0Element::zero();
            for (e, v) in lau {
                if !v.is_integer() {
                    return Err(format!("symmetric power {n} has non-integer term {v}"));
                }
                let c = K0Element::l_pow_class(e)
                    .mul(&K0Element::from_poly(Poly::constant(v.to_integer())));
                out = out.add(&c);
            }
            Ok(out)
        })
        .collect()
}

/// Number of invertible 2×2 matrices over 𝔽_p, by enumeration.
pub fn count_gl2(p: u64) -> u64 {
    enumerate_2x2(p, |det, _| det % p != 0)
}

/// Number of determinant-one 2×2 matrices over 𝔽_p, by enumeration.
pub fn count_sl2(p: u64) -> u64 {
    enumerate_2x2(p, |det, _| det % p == 1)
}

fn enumerate_2x2(p: u64, keep: impl Fn(u64, [u64; 4]) -> bool) -> u64 {
    let mut n = 0;
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                for d in 0..p {
                    let det = (a * d + p * p - b * c) % (p * p);
                    if keep(det % p, [a, b, c, d]) {
                        n += 1;
                    }
                }
            }
        }
    }
    n
}

/// Number of symmetric 2×2 matrices over 𝔽_p of rank exactly one: nonzero
/// with vanishing determinant.
pub fn count_sym2_rank1(p: u64) -> u64 {
    let mut n = 0;
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                let det = (a * c + p * p - b * b) % (p * p);
                if det % p == 0 && (a, b, c) != (0, 0, 0) {
                    n += 1;
                }
            }
        }
    }
    n
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::k0ring::class_projective_space;

    #[test]
    fn symmetric_powers_of_the_point_are_all_one() {
        let pt = MixedTateClass::from_pairs(&[(0, 1)]);
        let h = newton_symmetric_powers(&pt, 4).unwrap();
        assert_eq!(h.len(), 5);
        for hn in h {
            assert_eq!(hn, K0Element::from_int(1));
        }
    }

    #[test]
    fn symmetric_square_of_the_line_is_the_plane() {
        // Sym²(P¹) = P², so h₂ = 1 + L + L²
        let h = newton_symmetric_powers(&class_projective_space(1), 2).unwrap();
        assert_eq!(h[2], class_projective_space(2).to_k0());
    }

    #[test]
    fn matrix_enumerations_match_the_classical_orders() {
        assert_eq!(count_gl2(2), 6);
        assert_eq!(count_gl2(3), 48);
        assert_eq!(count_sl2(2), 6);
        assert_eq!(count_sl2(3), 24);
        assert_eq!(count_sym2_rank1(3), 8);
    }
}
