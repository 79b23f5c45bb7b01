//! Point counts of graph hypersurfaces over prime fields.
//!
//! The workhorse kernel peels off one variable at a time from the (always
//! multilinear) Kirchhoff polynomial, enumerating values until two variables
//! remain; the bilinear tail `A + B*x + C*y + D*x*y` is counted in closed
//! form. Cost is `p^(|E|-2)` leaf visits instead of `p^|E|` evaluations. A
//! naive full-enumeration kernel doubles as its cross-check oracle.

use super::graph::{Graph, GraphError};
use super::kirchhoff::kirchhoff;
use crate::budget::{self, BudgetError};
use crate::exactalg::MultiPoly;
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum CountError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Budget(#[from] BudgetError),
    #[error("{0} is not prime")]
    NotPrime(u64),
}

/// Affine and projective zero counts of the Kirchhoff hypersurface at `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountRecord {
    pub p: u64,
    pub affine: u64,
    pub projective: u64,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Counts points of `{Psi_g = 0}` over the field with `p` elements. The
/// projective count uses homogeneity: every affine zero other than the
/// origin lies on a (p-1)-element punctured line; a degree-0 polynomial (a
/// tree's) has no zeros at all.
pub fn count_points(g: &Graph, p: u64) -> Result<CountRecord, CountError> {
    if !is_prime(p) {
        return Err(CountError::NotPrime(p));
    }
    let psi = kirchhoff(g)?;
    let m = g.edge_count();
    if psi.total_degree() == Some(0) || m == 0 {
        return Ok(CountRecord {
            p,
            affine: 0,
            projective: 0,
        });
    }
    let mut need: u128 = 1;
    for _ in 0..m.saturating_sub(2) {
        need = need.saturating_mul(p as u128);
    }
    budget::check(need)?;
    let affine = affine_count_split(&psi, p);
    let projective = (affine - 1) / (p - 1);
    Ok(CountRecord {
        p,
        affine,
        projective,
    })
}

/// Dense multilinear coefficient table: entry `mask` holds the coefficient
/// of `prod_{i in mask} x_i`, reduced mod `p`.
fn coeff_table(psi: &MultiPoly, p: u64) -> Vec<u64> {
    use num::{Integer, ToPrimitive};
    let m = psi.nvars();
    let mut table = vec![0u64; 1 << m];
    for (mono, c) in psi.terms() {
        let mut mask = 0usize;
        for (i, &e) in mono.0.iter().enumerate() {
            debug_assert!(e <= 1, "Kirchhoff polynomials are multilinear");
            if e == 1 {
                mask |= 1 << i;
            }
        }
        let r = c.mod_floor(&crate::exactalg::BigInt::from(p));
        table[mask] = r.to_u64().expect("residue fits in u64");
    }
    table
}

/// Splitting kernel: substitute the highest variable and recurse; count the
/// final bilinear form analytically.
pub fn affine_count_split(psi: &MultiPoly, p: u64) -> u64 {
    let m = psi.nvars();
    let table = coeff_table(psi, p);
    match m {
        0 => {
            if table[0] == 0 {
                1
            } else {
                0
            }
        }
        1 => count_linear(table[0], table[1], p),
        _ => split_rec(&table, m, p),
    }
}

fn count_linear(a: u64, b: u64, p: u64) -> u64 {
    // a + b*x = 0
    if b != 0 {
        1
    } else if a == 0 {
        p
    } else {
        0
    }
}

fn count_bilinear(a: u64, b: u64, c: u64, d: u64, p: u64) -> u64 {
    // a + b*x + c*y + d*x*y = 0 over F_p^2
    if d != 0 {
        // unique y unless the y-coefficient c + d*x vanishes, i.e. at one x
        let cross = (a as u128 * d as u128) % p as u128 == (b as u128 * c as u128) % p as u128;
        (p - 1) + if cross { p } else { 0 }
    } else if c != 0 || b != 0 {
        // a nonzero linear form in (x, y) has p zeros
        p
    } else if a == 0 {
        p * p
    } else {
        0
    }
}

fn split_rec(table: &[u64], m: usize, p: u64) -> u64 {
    if m == 2 {
        return count_bilinear(table[0], table[1], table[2], table[3], p);
    }
    let half = 1usize << (m - 1);
    let mut child = vec![0u64; half];
    let mut total = 0u64;
    for v in 0..p {
        for s in 0..half {
            child[s] = (table[s] + v * table[s | half]) % p;
        }
        total += split_rec(&child, m - 1, p);
    }
    total
}

/// Oracle kernel: evaluates the polynomial at every point of the affine
/// grid. Exponential; for cross-checks and tiny inputs only.
pub fn affine_count_naive(psi: &MultiPoly, p: u64) -> Result<u64, BudgetError> {
    let m = psi.nvars();
    let mut need: u128 = 1;
    for _ in 0..m {
        need = need.saturating_mul(p as u128);
    }
    budget::check(need)?;
    let mut xs = vec![0u64; m];
    let mut count = 0;
    loop {
        if psi.eval_mod(&xs, p) == 0 {
            count += 1;
        }
        let mut i = 0;
        while i < m {
            xs[i] += 1;
            if xs[i] < p {
                break;
            }
            xs[i] = 0;
            i += 1;
        }
        if i == m {
            return Ok(count);
        }
    }
}
