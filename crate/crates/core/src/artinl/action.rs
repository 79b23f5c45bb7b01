//! Group actions on bundled curve models.
//!
//! A group element acts by a fractional-linear map on ℙ¹ or by
//! (x, y) ↦ (αx + β, τy) on a hyperelliptic model. Construction checks that
//! the assignment is a homomorphism against the multiplication table and
//! that every map preserves the curve equation.

use super::chartab::{ArtinError, CharacterData, CharacterFile};
use crate::curvezeta::{CurveData, CurveFile, CurveModel};
use serde::Deserialize;

/// One automorphism, with coefficients reduced mod p.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Automorphism {
    /// x ↦ (ax + b)/(cx + d), ad − bc ≠ 0.
    Moebius { a: u64, b: u64, c: u64, d: u64 },
    /// (x, y) ↦ (αx + β, τy), α ≠ 0, τ ≠ 0.
    HyperellMap { alpha: u64, beta: u64, tau: u64 },
}

fn mulp(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

impl Automorphism {
    fn reduce(&self, p: u64) -> Automorphism {
        match *self {
            Automorphism::Moebius { a, b, c, d } => Automorphism::Moebius {
                a: a % p,
                b: b % p,
                c: c % p,
                d: d % p,
            },
            Automorphism::HyperellMap { alpha, beta, tau } => Automorphism::HyperellMap {
                alpha: alpha % p,
                beta: beta % p,
                tau: tau % p,
            },
        }
    }

    fn is_identity(&self, p: u64) -> bool {
        match *self {
            Automorphism::Moebius { a, b, c, d } => b == 0 && c == 0 && a != 0 && a == d,
            Automorphism::HyperellMap { alpha, beta, tau } => {
                alpha == 1 && beta == 0 && tau == 1 && p > 1
            }
        }
    }

    /// self ∘ rhs (apply rhs first).
    fn compose(&self, rhs: &Automorphism, p: u64) -> Option<Automorphism> {
        match (self, rhs) {
            (
                &Automorphism::Moebius { a, b, c, d },
                &Automorphism::Moebius {
                    a: a2,
                    b: b2,
                    c: c2,
                    d: d2,
                },
            ) => Some(Automorphism::Moebius {
                a: (mulp(a, a2, p) + mulp(b, c2, p)) % p,
                b: (mulp(a, b2, p) + mulp(b, d2, p)) % p,
                c: (mulp(c, a2, p) + mulp(d, c2, p)) % p,
                d: (mulp(c, b2, p) + mulp(d, d2, p)) % p,
            }),
            (
                &Automorphism::HyperellMap { alpha, beta, tau },
                &Automorphism::HyperellMap {
                    alpha: a2,
                    beta: b2,
                    tau: t2,
                },
            ) => Some(Automorphism::HyperellMap {
                alpha: mulp(alpha, a2, p),
                beta: (mulp(alpha, b2, p) + beta) % p,
                tau: mulp(tau, t2, p),
            }),
            _ => None,
        }
    }

    /// Projective equality: Moebius maps agree up to a scalar.
    fn same_map(&self, rhs: &Automorphism, p: u64) -> bool {
        match (self, rhs) {
            (
                &Automorphism::Moebius { a, b, c, d },
                &Automorphism::Moebius {
                    a: a2,
                    b: b2,
                    c: c2,
                    d: d2,
                },
            ) => {
                let v = [a, b, c, d];
                let w = [a2, b2, c2, d2];
                (0..4).all(|i| {
                    (i + 1..4).all(|j| mulp(v[i], w[j], p) == mulp(v[j], w[i], p))
                }) && v != [0; 4]
                    && w != [0; 4]
            }
            _ => self == rhs,
        }
    }
}

/// A validated action: the curve, the group with its characters, and one
/// automorphism per group element.
#[derive(Debug, Clone)]
pub struct ActionData {
    curve: CurveData,
    group: CharacterData,
    maps: Vec<Automorphism>,
}

impl ActionData {
    pub fn new(
        curve: CurveData,
        group: CharacterData,
        maps: Vec<Automorphism>,
    ) -> Result<Self, ArtinError> {
        let p = curve.p();
        if maps.len() != group.order() {
            return Err(ArtinError::BadAction(format!(
                "{} maps for a group of order {}",
                maps.len(),
                group.order()
            )));
        }
        let maps: Vec<Automorphism> = maps.iter().map(|m| m.reduce(p)).collect();
        for m in &maps {
            match (m, curve.model()) {
                (&Automorphism::Moebius { a, b, c, d }, CurveModel::ProjectiveLine) => {
                    let det = (mulp(a, d, p) + p - mulp(b, c, p)) % p;
                    if det == 0 {
                        return Err(ArtinError::BadAction(
                            "degenerate fractional-linear map".into(),
                        ));
                    }
                }
                (
                    &Automorphism::HyperellMap { alpha, beta, tau },
                    CurveModel::Hyperelliptic { f },
                ) => {
                    if p == 2 {
                        return Err(ArtinError::BadAction(
                            "hyperelliptic actions need odd characteristic".into(),
                        ));
                    }
                    if alpha == 0 || tau == 0 {
                        return Err(ArtinError::BadAction(
                            "degenerate hyperelliptic map".into(),
                        ));
                    }
                    // f(αx + β) must equal τ² f(x)
                    let shifted = compose_poly_affine(f, alpha, beta, p);
                    let tau2 = mulp(tau, tau, p);
                    let scaled: Vec<u64> = f.iter().map(|&c| mulp(c, tau2, p)).collect();
                    if shifted != scaled {
                        return Err(ArtinError::BadAction(
                            "map does not preserve the curve equation".into(),
                        ));
                    }
                }
                _ => {
                    return Err(ArtinError::BadAction(
                        "automorphism kind does not match the curve model".into(),
                    ))
                }
            }
        }
        if !maps[group.identity()].is_identity(p) {
            return Err(ArtinError::BadAction(
                "identity element must act trivially".into(),
            ));
        }
        for i in 0..maps.len() {
            for j in 0..maps.len() {
                let composed = maps[i]
                    .compose(&maps[j], p)
                    .ok_or_else(|| ArtinError::BadAction("mixed automorphism kinds".into()))?;
                if !composed.same_map(&maps[group.mult(i, j)], p) {
                    return Err(ArtinError::BadAction(format!(
                        "maps do not respect the group law at ({},{})",
                        group.labels()[i],
                        group.labels()[j]
                    )));
                }
            }
        }
        Ok(ActionData { curve, group, maps })
    }

    pub fn curve(&self) -> &CurveData {
        &self.curve
    }

    pub fn group(&self) -> &CharacterData {
        &self.group
    }

    pub fn map(&self, g: usize) -> &Automorphism {
        &self.maps[g]
    }

    pub fn from_json_str(s: &str) -> Result<Self, ArtinError> {
        let file: ActionFile =
            serde_json::from_str(s).map_err(|e| ArtinError::Json(e.to_string()))?;
        let curve = CurveData::from_file(file.curve)?;
        let group = CharacterData::from_file(file.group)?;
        let p = curve.p() as i64;
        let maps = file
            .maps
            .iter()
            .map(|m| m.to_automorphism(p))
            .collect::<Result<Vec<_>, _>>()?;
        ActionData::new(curve, group, maps)
    }
}

/// Coefficients of f(αx + β) mod p.
fn compose_poly_affine(f: &[u64], alpha: u64, beta: u64, p: u64) -> Vec<u64> {
    // Horner: start from the top coefficient, repeatedly multiply by (αx + β).
    let mut acc: Vec<u64> = Vec::new();
    for &c in f.iter().rev() {
        let mut next = vec![0u64; acc.len() + 1];
        for (k, &v) in acc.iter().enumerate() {
            next[k + 1] = (next[k + 1] + mulp(v, alpha, p)) % p;
            next[k] = (next[k] + mulp(v, beta, p)) % p;
        }
        next[0] = (next[0] + c % p) % p;
        acc = next;
    }
    while acc.last() == Some(&0) {
        acc.pop();
    }
    acc
}

#[derive(Debug, Deserialize)]
struct ActionFile {
    curve: CurveFile,
    group: CharacterFile,
    maps: Vec<MapFile>,
}

#[derive(Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum MapFile {
    Moebius { coeffs: [i64; 4] },
    Hyperelliptic { coeffs: [i64; 3] },
}

impl MapFile {
    fn to_automorphism(&self, p: i64) -> Result<Automorphism, ArtinError> {
        let r = |v: i64| v.rem_euclid(p) as u64;
        match *self {
            MapFile::Moebius { coeffs: [a, b, c, d] } => Ok(Automorphism::Moebius {
                a: r(a),
                b: r(b),
                c: r(c),
                d: r(d),
            }),
            MapFile::Hyperelliptic {
                coeffs: [alpha, beta, tau],
            } => Ok(Automorphism::HyperellMap {
                alpha: r(alpha),
                beta: r(beta),
                tau: r(tau),
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::chartab::{character_table_s3, character_table_v4, character_table_z2};
    use super::*;

    fn moebius(a: i64, b: i64, c: i64, d: i64, p: i64) -> Automorphism {
        Automorphism::Moebius {
            a: a.rem_euclid(p) as u64,
            b: b.rem_euclid(p) as u64,
            c: c.rem_euclid(p) as u64,
            d: d.rem_euclid(p) as u64,
        }
    }

    /// ℤ/2 acting on ℙ¹ by x ↦ −x.
    fn z2_negation_on_line(p: u64) -> ActionData {
        ActionData::new(
            CurveData::projective_line(p).unwrap(),
            character_table_z2(),
            vec![moebius(1, 0, 0, 1, p as i64), moebius(-1, 0, 0, 1, p as i64)],
        )
        .unwrap()
    }

    #[test]
    fn builds_the_bundled_line_actions() {
        z2_negation_on_line(3);
        z2_negation_on_line(5);
        // S3 permuting {0, 1, infinity}
        let p = 3;
        ActionData::new(
            CurveData::projective_line(p).unwrap(),
            character_table_s3(),
            vec![
                moebius(1, 0, 0, 1, 3),  // e
                moebius(0, 1, -1, 1, 3), // 0 -> 1 -> inf -> 0 : 1/(1-x)
                moebius(1, -1, 1, 0, 3), // inverse cycle: (x-1)/x
                moebius(1, 0, 1, -1, 3), // swap 1,inf: x/(x-1)
                moebius(0, 1, 1, 0, 3),  // swap 0,inf: 1/x
                moebius(-1, 1, 0, 1, 3), // swap 0,1: 1-x
            ],
        )
        .unwrap();
        // V4 inside PGL2
        ActionData::new(
            CurveData::projective_line(p).unwrap(),
            character_table_v4(),
            vec![
                moebius(1, 0, 0, 1, 3),
                moebius(-1, 0, 0, 1, 3),
                moebius(0, 1, 1, 0, 3),
                moebius(0, -1, 1, 0, 3),
            ],
        )
        .unwrap();
    }

    #[test]
    fn builds_the_hyperelliptic_involution() {
        let e = CurveData::hyperelliptic(3, &[0, -1, 0, 1]).unwrap();
        let a = ActionData::new(
            e,
            character_table_z2(),
            vec![
                Automorphism::HyperellMap {
                    alpha: 1,
                    beta: 0,
                    tau: 1,
                },
                Automorphism::HyperellMap {
                    alpha: 1,
                    beta: 0,
                    tau: 2,
                },
            ],
        )
        .unwrap();
        assert_eq!(a.curve().genus(), 1);
    }

    #[test]
    fn rejects_broken_actions() {
        let p1 = CurveData::projective_line(3).unwrap();
        // wrong element count
        assert!(matches!(
            ActionData::new(
                p1.clone(),
                character_table_z2(),
                vec![moebius(1, 0, 0, 1, 3)]
            ),
            Err(ArtinError::BadAction(_))
        ));
        // not an involution: x -> x + 1 has order 3
        assert!(matches!(
            ActionData::new(
                p1.clone(),
                character_table_z2(),
                vec![moebius(1, 0, 0, 1, 3), moebius(1, 1, 0, 1, 3)]
            ),
            Err(ArtinError::BadAction(_))
        ));
        // degenerate matrix
        assert!(matches!(
            ActionData::new(
                p1,
                character_table_z2(),
                vec![moebius(1, 0, 0, 1, 3), moebius(1, 2, 2, 4, 3)]
            ),
            Err(ArtinError::BadAction(_))
        ));
        // hyperelliptic map that scales the equation wrongly
        let e = CurveData::hyperelliptic(3, &[0, -1, 0, 1]).unwrap();
        assert!(matches!(
            ActionData::new(
                e,
                character_table_z2(),
                vec![
                    Automorphism::HyperellMap {
                        alpha: 1,
                        beta: 0,
                        tau: 1
                    },
                    Automorphism::HyperellMap {
                        alpha: 2,
                        beta: 0,
                        tau: 1
                    },
                ]
            ),
            Err(ArtinError::BadAction(_))
        ));
    }

    #[test]
    fn translation_symmetry_in_characteristic_three() {
        // x^3 - x is invariant under x -> x + 1 in characteristic 3, and the
        // shift commutes with y -> -y; the equation-preservation check must
        // accept both.
        let e = CurveData::hyperelliptic(3, &[0, -1, 0, 1]).unwrap();
        let shifted = compose_poly_affine(
            match e.model() {
                CurveModel::Hyperelliptic { f } => f,
                _ => unreachable!(),
            },
            1,
            1,
            3,
        );
        assert_eq!(shifted, vec![0, 2, 0, 1]);
    }

    #[test]
    fn json_roundtrip_of_an_action() {
        let j = r#"{
            "curve": {"model": "projective_line", "p": 3},
            "group": { "labels": ["e","s"], "inverse": [0,1], "classes": [[0],[1]],
                       "mult": [[0,1],[1,0]], "table": [["1","1"],["1","-1"]] },
            "maps": [ {"kind": "moebius", "coeffs": [1,0,0,1]},
                      {"kind": "moebius", "coeffs": [-1,0,0,1]} ]
        }"#;
        let a = ActionData::from_json_str(j).unwrap();
        assert_eq!(a.group().order(), 2);
        assert_eq!(
            *a.map(1),
            Automorphism::Moebius {
                a: 2,
                b: 0,
                c: 0,
                d: 1
            }
        );
    }
}
