//! Named bundles of the objects the crate is exercised against: small
//! multigraphs, curves over 𝔽₂/𝔽₃/𝔽₅, Weyl root data, and validated group
//! actions on curves.
//!
//! Everything here is data, not computation. The `*_by_name` lookups back
//! the command-line frontend's bundled inputs; the full lists drive the
//! cross-module consistency suite. Names are stable identifiers — fixtures
//! and reports refer to them.

use crate::artinl::{
    character_table_s3, character_table_v4, character_table_z2, ActionData, Automorphism,
};
use crate::curvezeta::CurveData;
use crate::graphzeta::Graph;
use crate::k0ring::{builtin, builtin_names, RootDatumLite};

fn named_graph(name: &'static str, vertices: usize, edges: &[(usize, usize)]) -> (&'static str, Graph) {
    (
        name,
        Graph::new(vertices, edges.to_vec()).expect("catalog graphs are well-formed"),
    )
}

/// The bundled connected multigraphs, all with at most 8 edges. `w4` (the
/// wheel on four rim vertices) is the largest; `banana{n}` is two vertices
/// joined by n parallel edges.
pub fn graphs() -> Vec<(&'static str, Graph)> {
    vec![
        named_graph("path3", 3, &[(0, 1), (1, 2)]),
        named_graph("star4", 4, &[(0, 1), (0, 2), (0, 3)]),
        named_graph("triangle", 3, &[(0, 1), (1, 2), (2, 0)]),
        named_graph("banana2", 2, &[(0, 1); 2]),
        named_graph("banana3", 2, &[(0, 1); 3]),
        named_graph("banana4", 2, &[(0, 1); 4]),
        named_graph("banana5", 2, &[(0, 1); 5]),
        named_graph("c4", 4, &[(0, 1), (1, 2), (2, 3), (3, 0)]),
        named_graph("c5", 5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]),
        named_graph("c6", 6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]),
        named_graph("k4", 4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
        named_graph("k4_minus_edge", 4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]),
        named_graph(
            "k23",
            5,
            &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)],
        ),
        named_graph(
            "k4_parallel",
            4,
            &[(0, 1), (0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
        ),
        named_graph(
            "w4",
            5,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (0, 4),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 1),
            ],
        ),
    ]
}

pub fn graph_by_name(name: &str) -> Option<Graph> {
    graphs().into_iter().find(|(n, _)| *n == name).map(|(_, g)| g)
}

/// The bundled curve models:
///
/// * `p1_f2`, `p1_f3`, `p1_f5` — the projective line;
/// * `ell_f3_a` — y² = x³ − x over 𝔽₃ (supersingular, 4 points);
/// * `ell_f3_b` — y² = x³ − x + 1 over 𝔽₃ (7 points);
/// * `ell_f5_a` — y² = x³ + x over 𝔽₅ (4 points);
/// * `ell_f5_b` — y² = x³ + x + 1 over 𝔽₅ (9 points);
/// * `quartic_f3` — the genus-1 quartic model y² = x⁴ + x + 1 over 𝔽₃;
/// * `fermat_f2` — the plane Fermat cubic x³ + y³ + z³ = 0 over 𝔽₂.
pub fn curves() -> Vec<(&'static str, CurveData)> {
    let mk = |r: Result<CurveData, _>| r.expect("catalog curves are well-formed");
    vec![
        ("p1_f2", mk(CurveData::projective_line(2))),
        ("p1_f3", mk(CurveData::projective_line(3))),
        ("p1_f5", mk(CurveData::projective_line(5))),
        ("ell_f3_a", mk(CurveData::hyperelliptic(3, &[0, -1, 0, 1]))),
        ("ell_f3_b", mk(CurveData::hyperelliptic(3, &[1, -1, 0, 1]))),
        ("ell_f5_a", mk(CurveData::hyperelliptic(5, &[0, 1, 0, 1]))),
        ("ell_f5_b", mk(CurveData::hyperelliptic(5, &[1, 1, 0, 1]))),
        ("quartic_f3", mk(CurveData::hyperelliptic(3, &[1, 1, 0, 0, 1]))),
        (
            "fermat_f2",
            mk(CurveData::plane(
                2,
                &[((3, 0, 0), 1), ((0, 3, 0), 1), ((0, 0, 3), 1)],
            )),
        ),
    ]
}

pub fn curve_by_name(name: &str) -> Option<CurveData> {
    curves().into_iter().find(|(n, _)| *n == name).map(|(_, c)| c)
}

/// The bundled curves of genus one, the inputs for the elliptic checks.
pub fn genus_one_curves() -> Vec<(&'static str, CurveData)> {
    curves().into_iter().filter(|(_, c)| c.genus() == 1).collect()
}

/// Every built-in root datum, validated.
pub fn root_data() -> Vec<RootDatumLite> {
    builtin_names()
        .iter()
        .map(|n| builtin(n).expect("builtin root data resolve"))
        .collect()
}

fn moebius(a: u64, b: u64, c: u64, d: u64) -> Automorphism {
    Automorphism::Moebius { a, b, c, d }
}

fn negation_on_line(p: u64) -> ActionData {
    ActionData::new(
        CurveData::projective_line(p).expect("line exists"),
        character_table_z2(),
        vec![moebius(1, 0, 0, 1), moebius(p - 1, 0, 0, 1)],
    )
    .expect("catalog actions are valid")
}

/// The bundled group actions:
///
/// * `z2_p1_f3`, `z2_p1_f5` — ℤ/2 acting by x ↦ −x on the line;
/// * `s3_p1_f3` — S₃ permuting {0, 1, ∞} by fractional-linear maps;
/// * `v4_p1_f3` — the Klein four-group ⟨x ↦ −x, x ↦ 1/x⟩;
/// * `z2_ell_f3` — the hyperelliptic involution on y² = x³ − x.
pub fn actions() -> Vec<(&'static str, ActionData)> {
    let valid = |a: Result<ActionData, _>| a.expect("catalog actions are valid");
    vec![
        ("z2_p1_f3", negation_on_line(3)),
        ("z2_p1_f5", negation_on_line(5)),
        (
            "s3_p1_f3",
            valid(ActionData::new(
                CurveData::projective_line(3).expect("line exists"),
                character_table_s3(),
                vec![
                    moebius(1, 0, 0, 1),
                    moebius(0, 1, 2, 1),
                    moebius(1, 2, 1, 0),
                    moebius(1, 0, 1, 2),
                    moebius(0, 1, 1, 0),
                    moebius(2, 1, 0, 1),
                ],
            )),
        ),
        (
            "v4_p1_f3",
            valid(ActionData::new(
                CurveData::projective_line(3).expect("line exists"),
                character_table_v4(),
                vec![
                    moebius(1, 0, 0, 1),
                    moebius(2, 0, 0, 1),
                    moebius(0, 1, 1, 0),
                    moebius(0, 2, 1, 0),
                ],
            )),
        ),
        (
            "z2_ell_f3",
            valid(ActionData::new(
                CurveData::hyperelliptic(3, &[0, -1, 0, 1]).expect("curve exists"),
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
            )),
        ),
    ]
}

pub fn action_by_name(name: &str) -> Option<ActionData> {
    actions().into_iter().find(|(n, _)| *n == name).map(|(_, a)| a)
}
