//! Split semisimple groups as numerical data: rank, dimension, degrees of
//! invariants, and simple reflections for brute-force Weyl enumeration.

use super::k0::{K0Element, K0Error, LInvSeries};
use crate::exactalg::{BigInt, Poly};
use num::One;
use std::collections::BTreeMap;

type Matrix = Vec<Vec<i64>>;

#[derive(Clone, Debug)]
pub struct RootDatumLite {
    pub name: String,
    pub rank: usize,
    pub dim: usize,
    /// Degrees of the invariants d_1..d_r (exponents plus one).
    pub degrees: Vec<u32>,
    /// Simple reflections acting on simple-root coordinates.
    pub weyl_generators: Vec<Matrix>,
}

/// Safety bound on brute-force Weyl enumeration.
pub const WEYL_BOUND: usize = 10_000;

impl RootDatumLite {
    pub fn validate(&self) -> Result<(), K0Error> {
        let sum: u64 = self.degrees.iter().map(|&d| d as u64).sum();
        if self.degrees.len() != self.rank {
            return Err(K0Error::Invalid(format!(
                "{}: {} degrees for rank {}",
                self.name,
                self.degrees.len(),
                self.rank
            )));
        }
        if self.degrees.iter().any(|&d| d < 2) {
            return Err(K0Error::Invalid(format!(
                "{}: every degree must be at least 2",
                self.name
            )));
        }
        if (self.dim + self.rank) % 2 != 0 || 2 * sum != (self.dim + self.rank) as u64 {
            return Err(K0Error::Invalid(format!(
                "{}: degrees sum to {} but (dim + rank)/2 = {}",
                self.name,
                sum,
                (self.dim + self.rank) as f64 / 2.0
            )));
        }
        if self.weyl_generators.len() != self.rank
            || self
                .weyl_generators
                .iter()
                .any(|m| m.len() != self.rank || m.iter().any(|row| row.len() != self.rank))
        {
            return Err(K0Error::Invalid(format!(
                "{}: generators must be {r} square matrices of size {r}",
                self.name,
                r = self.rank
            )));
        }
        Ok(())
    }
}

fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let mut out = vec![vec![0i64; n]; n];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, v) in row.iter_mut().enumerate() {
            *v = (0..n).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

/// Simple reflections in simple-root coordinates from a Cartan matrix:
/// `s_i(alpha_j) = alpha_j - c[i][j] * alpha_i`.
fn reflections_from_cartan(c: &[Vec<i64>]) -> Vec<Matrix> {
    let n = c.len();
    (0..n)
        .map(|i| {
            let mut m = identity(n);
            for j in 0..n {
                m[i][j] -= c[i][j];
            }
            m
        })
        .collect()
}

/// Built-in table: A1, A2, B2, G2, and SL2..SL6.
pub fn builtin(name: &str) -> Option<RootDatumLite> {
    let a_cartan = |r: usize| -> Vec<Vec<i64>> {
        (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| match (j as i64 - i as i64).abs() {
                        0 => 2,
                        1 => -1,
                        _ => 0,
                    })
                    .collect()
            })
            .collect()
    };
    let sl = |n: usize, name: &str| RootDatumLite {
        name: name.into(),
        rank: n - 1,
        dim: n * n - 1,
        degrees: (2..=n as u32).collect(),
        weyl_generators: reflections_from_cartan(&a_cartan(n - 1)),
    };
    match name {
        "A1" => Some(sl(2, "A1")),
        "A2" => Some(sl(3, "A2")),
        "B2" => Some(RootDatumLite {
            name: "B2".into(),
            rank: 2,
            dim: 10,
            degrees: vec![2, 4],
            weyl_generators: reflections_from_cartan(&[vec![2, -1], vec![-2, 2]]),
        }),
        "G2" => Some(RootDatumLite {
            name: "G2".into(),
            rank: 2,
            dim: 14,
            degrees: vec![2, 6],
            weyl_generators: reflections_from_cartan(&[vec![2, -1], vec![-3, 2]]),
        }),
        "SL2" => Some(sl(2, "SL2")),
        "SL3" => Some(sl(3, "SL3")),
        "SL4" => Some(sl(4, "SL4")),
        "SL5" => Some(sl(5, "SL5")),
        "SL6" => Some(sl(6, "SL6")),
        _ => None,
    }
}

pub fn builtin_names() -> &'static [&'static str] {
    &["A1", "A2", "B2", "G2", "SL2", "SL3", "SL4", "SL5", "SL6"]
}

/// Enumerates the Weyl group by breadth-first closure under the generators,
/// returning each element's minimal word length.
pub fn weyl_enumerate(rd: &RootDatumLite) -> Result<BTreeMap<Matrix, usize>, K0Error> {
    rd.validate()?;
    if rd.rank > 2 {
        return Err(K0Error::Invalid(format!(
            "{}: brute-force Weyl enumeration is limited to rank <= 2",
            rd.name
        )));
    }
    let mut lengths: BTreeMap<Matrix, usize> = BTreeMap::new();
    let mut frontier = vec![identity(rd.rank)];
    lengths.insert(frontier[0].clone(), 0);
    let mut len = 0;
    while !frontier.is_empty() {
        len += 1;
        let mut next = Vec::new();
        for w in &frontier {
            for s in &rd.weyl_generators {
                let ws = mat_mul(w, s);
                if !lengths.contains_key(&ws) {
                    lengths.insert(ws.clone(), len);
                    next.push(ws);
                    if lengths.len() > WEYL_BOUND {
                        return Err(K0Error::Invalid(format!(
                            "{}: Weyl enumeration exceeded the safety bound of {WEYL_BOUND} elements",
                            rd.name
                        )));
                    }
                }
            }
        }
        frontier = next;
    }
    Ok(lengths)
}

/// Length generating polynomial `sum_w t^(l(w))`.
pub fn weyl_length_poly(rd: &RootDatumLite) -> Result<Poly<BigInt>, K0Error> {
    let lengths = weyl_enumerate(rd)?;
    let max = lengths.values().copied().max().unwrap_or(0);
    let mut coeffs = vec![BigInt::from(0); max + 1];
    for l in lengths.values() {
        coeffs[*l] += BigInt::one();
    }
    Ok(Poly::new(coeffs))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WeylCheck {
    Holds {
        group_order: usize,
        length_poly: Poly<BigInt>,
    },
    Fails {
        lhs: String,
        rhs: String,
    },
}

/// Compares `(t-1)^r * sum_w t^(l(w))` against `prod (t^(d_i) - 1)` as exact
/// polynomials.
pub fn weyl_poincare_check(rd: &RootDatumLite) -> Result<WeylCheck, K0Error> {
    let w = weyl_length_poly(rd)?;
    let t_minus_1 = Poly::new(vec![BigInt::from(-1), BigInt::one()]);
    let lhs = w.mul(&t_minus_1.pow(rd.rank as u32));
    let mut rhs = Poly::one();
    for &d in &rd.degrees {
        rhs = rhs.mul(&Poly::monomial(BigInt::one(), d as usize).sub(&Poly::one()));
    }
    if lhs == rhs {
        Ok(WeylCheck::Holds {
            group_order: w.eval(&BigInt::one()).try_into().expect("small order"),
            length_poly: w,
        })
    } else {
        Ok(WeylCheck::Fails {
            lhs: lhs.display("t"),
            rhs: rhs.display("t"),
        })
    }
}

/// `[G] = L^((dim-r)/2) * prod (L^(d_i) - 1)`, the polynomial form of
/// `L^dim * prod (1 - L^(-d_i))`.
pub fn class_semisimple(rd: &RootDatumLite) -> Result<K0Element, K0Error> {
    rd.validate()?;
    let mut p = Poly::monomial(BigInt::one(), (rd.dim - rd.rank) / 2);
    for &d in &rd.degrees {
        p = p.mul(&Poly::monomial(BigInt::one(), d as usize).sub(&Poly::one()));
    }
    Ok(K0Element::from_poly(p))
}

/// `[BG] = [G]^-1` expanded in powers of `L^-1`.
pub fn class_bg_series(rd: &RootDatumLite, order: usize) -> Result<LInvSeries, K0Error> {
    Ok(class_semisimple(rd)?.inv()?.expand_l_inverse(order))
}

/// `[G]` assembled the Bruhat way: `(sum_w L^(l(w))) * (L-1)^r * L^((dim-r)/2)`.
pub fn bruhat_class(rd: &RootDatumLite) -> Result<K0Element, K0Error> {
    let w = weyl_length_poly(rd)?;
    let l_minus_1 = Poly::new(vec![BigInt::from(-1), BigInt::one()]);
    let p = w
        .mul(&l_minus_1.pow(rd.rank as u32))
        .mul(&Poly::monomial(BigInt::one(), (rd.dim - rd.rank) / 2));
    Ok(K0Element::from_poly(p))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(v: &[i64]) -> Poly<BigInt> {
        Poly::new(v.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn length_polynomials_match_hand_enumeration() {
        assert_eq!(weyl_length_poly(&builtin("A1").unwrap()).unwrap(), ip(&[1, 1]));
        assert_eq!(
            weyl_length_poly(&builtin("A2").unwrap()).unwrap(),
            ip(&[1, 2, 2, 1])
        );
        assert_eq!(
            weyl_length_poly(&builtin("B2").unwrap()).unwrap(),
            ip(&[1, 2, 2, 2, 1])
        );
    }

    #[test]
    fn poincare_identity_holds_on_builtins() {
        for name in ["A1", "A2", "B2", "G2"] {
            let rd = builtin(name).unwrap();
            match weyl_poincare_check(&rd).unwrap() {
                WeylCheck::Holds { group_order, .. } => {
                    let expected = match name {
                        "A1" => 2,
                        "A2" => 6,
                        "B2" => 8,
                        "G2" => 12,
                        _ => unreachable!(),
                    };
                    assert_eq!(group_order, expected, "{name}");
                }
                WeylCheck::Fails { lhs, rhs } => panic!("{name}: {lhs} != {rhs}"),
            }
        }
    }

    #[test]
    fn poincare_check_reports_witness_on_bad_degrees() {
        let mut rd = builtin("B2").unwrap();
        rd.degrees = vec![3, 3]; // keeps the sum invariant but breaks the identity
        assert!(matches!(
            weyl_poincare_check(&rd).unwrap(),
            WeylCheck::Fails { .. }
        ));
    }

    #[test]
    fn enumeration_bound_trips_on_infinite_groups() {
        let rd = RootDatumLite {
            name: "fake".into(),
            rank: 2,
            dim: 10,
            degrees: vec![2, 4],
            weyl_generators: vec![
                vec![vec![-1, 4], vec![0, 1]],
                vec![vec![1, 0], vec![1, -1]],
            ],
        };
        let err = weyl_enumerate(&rd).unwrap_err();
        assert!(err.to_string().contains("safety bound"));
    }

    #[test]
    fn semisimple_classes() {
        let sl2 = class_semisimple(&builtin("SL2").unwrap()).unwrap();
        assert_eq!(sl2.num(), &ip(&[0, -1, 0, 1]));
        assert_eq!(
            sl2.specialize_int(2).unwrap(),
            num::BigRational::from_integer(6.into())
        );
        let sl3 = class_semisimple(&builtin("SL3").unwrap()).unwrap();
        // L^3 (L^2-1)(L^3-1) = L^8 (1-L^-2)(1-L^-3)
        assert_eq!(
            sl3.num(),
            &Poly::monomial(BigInt::one(), 3)
                .mul(&ip(&[-1, 0, 1]))
                .mul(&ip(&[-1, 0, 0, 1]))
        );
        for n in ["SL4", "SL5", "SL6"] {
            assert!(builtin(n).unwrap().validate().is_ok(), "{n}");
        }
    }

    #[test]
    fn bruhat_assembly_agrees_with_product_form() {
        for name in ["A1", "A2", "B2", "G2"] {
            let rd = builtin(name).unwrap();
            assert_eq!(
                bruhat_class(&rd).unwrap(),
                class_semisimple(&rd).unwrap(),
                "{name}"
            );
        }
    }

    #[test]
    fn bg_expansion_of_gm() {
        // BG_m with G_m treated as the 1-dimensional torus: [G_m] = L - 1
        let x = K0Element::from_poly(ip(&[-1, 1])).inv().unwrap();
        let s = x.expand_l_inverse(4);
        assert_eq!(s.to_string(), "L^-1 + L^-2 + L^-3 + L^-4 + L^-5 + O(L^-6)");
    }
}
