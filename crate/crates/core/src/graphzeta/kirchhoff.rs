//! The Kirchhoff polynomial of a connected multigraph, computed two
//! independent ways: spanning-tree enumeration and the matrix-tree
//! determinant. The convention is the spanning-tree-complement form
//! `Psi = sum_T prod_{e not in T} x_e`, homogeneous of degree b1 with unit
//! coefficients.

use super::graph::{Graph, GraphError, UnionFind};
use crate::exactalg::{BigInt, Monomial, MultiPoly};
use num::One;

/// Computes the Kirchhoff polynomial by both routes and asserts they agree.
pub fn kirchhoff(g: &Graph) -> Result<MultiPoly, GraphError> {
    let by_trees = kirchhoff_spanning_trees(g)?;
    let by_det = kirchhoff_matrix_tree(g)?;
    assert_eq!(
        by_trees, by_det,
        "spanning-tree and matrix-tree computations disagree on {g:?}"
    );
    Ok(by_trees)
}

/// Direct enumeration: each spanning tree contributes the product of the
/// variables of its complement.
pub fn kirchhoff_spanning_trees(g: &Graph) -> Result<MultiPoly, GraphError> {
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    let m = g.edge_count();
    let n = g.vertices();
    let mut out = MultiPoly::zero(m);
    let tree_size = n - 1;
    for mask in 0u64..(1 << m) {
        if mask.count_ones() as usize != tree_size {
            continue;
        }
        let mut uf = UnionFind::new(n);
        let mut acyclic = true;
        for (i, &(u, v)) in g.edges().iter().enumerate() {
            if mask >> i & 1 == 1 && !uf.union(u, v) {
                acyclic = false;
                break;
            }
        }
        if !acyclic {
            continue;
        }
        // n-1 acyclic edges on n vertices always span
        let exps: Vec<u32> = (0..m).map(|i| u32::from(mask >> i & 1 == 0)).collect();
        out.add_term(Monomial(exps), BigInt::one());
    }
    Ok(out)
}

/// Matrix-tree route: the determinant of the x-weighted reduced Laplacian is
/// `sum_T prod_{e in T} x_e`; flipping each multilinear monomial to its
/// complement yields the spanning-tree-complement convention.
pub fn kirchhoff_matrix_tree(g: &Graph) -> Result<MultiPoly, GraphError> {
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    let m = g.edge_count();
    let n = g.vertices();
    if n == 1 {
        return Ok(MultiPoly::one(m));
    }
    // reduced Laplacian over vertices 1..n
    let mut lap = vec![vec![MultiPoly::zero(m); n - 1]; n - 1];
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        let x = MultiPoly::var(m, i);
        for w in [u, v] {
            if w > 0 {
                lap[w - 1][w - 1] = lap[w - 1][w - 1].add(&x);
            }
        }
        if u > 0 && v > 0 {
            lap[u - 1][v - 1] = lap[u - 1][v - 1].sub(&x);
            lap[v - 1][u - 1] = lap[v - 1][u - 1].sub(&x);
        }
    }
    let tree_sum = determinant(&lap);
    debug_assert!(tree_sum.is_multilinear());
    let mut out = MultiPoly::zero(m);
    for (mono, c) in tree_sum.terms() {
        let flipped: Vec<u32> = mono.0.iter().map(|&e| 1 - e).collect();
        out.add_term(Monomial(flipped), c.clone());
    }
    Ok(out)
}

/// Laplace expansion along the first column; matrices stay tiny (vertices
/// are bounded by the enumeration budget, not the determinant).
fn determinant(m: &[Vec<MultiPoly>]) -> MultiPoly {
    let n = m.len();
    let nvars = m[0][0].nvars();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = MultiPoly::zero(nvars);
    for i in 0..n {
        if m[i][0].is_zero() {
            continue;
        }
        let minor: Vec<Vec<MultiPoly>> = (0..n)
            .filter(|&r| r != i)
            .map(|r| m[r][1..].to_vec())
            .collect();
        let cofactor = m[i][0].mul(&determinant(&minor));
        if i % 2 == 0 {
            acc = acc.add(&cofactor);
        } else {
            acc = acc.sub(&cofactor);
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn psi(vertices: usize, edges: &[(usize, usize)]) -> MultiPoly {
        kirchhoff(&Graph::new(vertices, edges.to_vec()).unwrap()).unwrap()
    }

    #[test]
    fn small_graphs_match_hand_enumeration() {
        assert_eq!(psi(2, &[(0, 1), (0, 1)]).to_canonical_string(), "x1 + x2");
        assert_eq!(
            psi(3, &[(0, 1), (1, 2), (0, 2)]).to_canonical_string(),
            "x1 + x2 + x3"
        );
        assert_eq!(
            psi(2, &[(0, 1), (0, 1), (0, 1)]).to_canonical_string(),
            "x1*x2 + x1*x3 + x2*x3"
        );
        // trees have constant Kirchhoff polynomial
        assert_eq!(psi(3, &[(0, 1), (1, 2)]).to_canonical_string(), "1");
        assert_eq!(psi(1, &[]).to_canonical_string(), "1");
    }

    #[test]
    fn degree_and_coefficients() {
        let g = Graph::new(4, vec![(0, 1), (1, 2), (2, 3), (0, 3), (0, 2), (1, 3)]).unwrap();
        let p = kirchhoff(&g).unwrap();
        assert!(p.is_homogeneous());
        assert!(p.is_multilinear());
        assert_eq!(p.total_degree(), Some(g.b1() as u32));
        assert!(p.terms().all(|(_, c)| c.is_one()));
        // K4 has 16 spanning trees
        assert_eq!(p.num_terms(), 16);
    }

    #[test]
    fn disconnected_graphs_are_rejected() {
        let g = Graph::new(4, vec![(0, 1), (2, 3)]).unwrap();
        assert_eq!(kirchhoff(&g).unwrap_err(), GraphError::Disconnected);
    }

    #[test]
    fn deletion_contraction_recurrence() {
        let g = Graph::new(4, vec![(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)]).unwrap();
        let p = kirchhoff(&g).unwrap();
        for e in 0..g.edge_count() {
            let without_e = p.substitute(e, &BigInt::from(0));
            let with_e = p.sub(&without_e).divide_by_var(e).unwrap();
            let deleted = kirchhoff(&g.delete_edge(e)).unwrap().insert_var(e);
            let contracted = kirchhoff(&g.contract_edge(e)).unwrap().insert_var(e);
            assert_eq!(with_e, deleted, "edge {e}: trees avoiding the edge");
            assert_eq!(without_e, contracted, "edge {e}: trees through the edge");
        }
    }

    #[test]
    fn bridge_variables_do_not_occur() {
        // triangle with a pendant edge: edge 3 is a bridge
        let g = Graph::new(4, vec![(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        assert!(g.is_bridge(3));
        let p = kirchhoff(&g).unwrap();
        assert_eq!(p.degree_in(3), 0);
        let bare_triangle = Graph::new(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(p, kirchhoff(&bare_triangle).unwrap().insert_var(3));
    }
}
