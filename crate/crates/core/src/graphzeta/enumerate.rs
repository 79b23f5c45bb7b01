//! Exhaustive generation of connected multigraphs up to isomorphism, used
//! to stress the dual Kirchhoff computation on every small case.

use super::graph::{Graph, UnionFind};

/// All connected multigraphs (no self-loops) with at most `max_edges` edges,
/// one representative per isomorphism class, including the one-vertex graph.
/// A connected graph with `e` edges has at most `e + 1` vertices, so the
/// vertex count is bounded alongside the edge count.
pub fn connected_multigraphs_up_to(max_edges: usize) -> Vec<Graph> {
    let mut out = vec![Graph::new(1, vec![]).expect("point graph")];
    for v in 2..=max_edges + 1 {
        let pairs: Vec<(usize, usize)> = (0..v)
            .flat_map(|a| ((a + 1)..v).map(move |b| (a, b)))
            .collect();
        let perms = permutations(v);
        for e in (v - 1)..=max_edges {
            let mut idx = vec![0usize; e]; // nondecreasing indices into pairs
            'multisets: loop {
                let edges: Vec<(usize, usize)> = idx.iter().map(|&i| pairs[i]).collect();
                if spans(v, &edges) && is_canonical(&edges, &perms) {
                    out.push(Graph::new(v, edges).expect("valid by construction"));
                }
                let mut pos = e;
                while pos > 0 {
                    pos -= 1;
                    if idx[pos] + 1 < pairs.len() {
                        let val = idx[pos] + 1;
                        for slot in idx.iter_mut().skip(pos) {
                            *slot = val;
                        }
                        continue 'multisets;
                    }
                }
                break;
            }
        }
    }
    out
}

fn spans(v: usize, edges: &[(usize, usize)]) -> bool {
    let mut uf = UnionFind::new(v);
    for &(a, b) in edges {
        uf.union(a, b);
    }
    uf.components() == 1
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    heap_permute(&mut items, n, &mut out);
    out
}

fn heap_permute(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == 1 {
        out.push(items.clone());
        return;
    }
    for i in 0..k {
        heap_permute(items, k - 1, out);
        if k % 2 == 0 {
            items.swap(i, k - 1);
        } else {
            items.swap(0, k - 1);
        }
    }
}

/// A labeled graph is the class representative when no vertex relabeling
/// produces a strictly smaller sorted edge list.
fn is_canonical(edges: &[(usize, usize)], perms: &[Vec<usize>]) -> bool {
    let mut own: Vec<(usize, usize)> = edges.to_vec();
    own.sort_unstable();
    let mut scratch: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
    for perm in perms {
        scratch.clear();
        for &(a, b) in edges {
            let (x, y) = (perm[a], perm[b]);
            scratch.push(if x < y { (x, y) } else { (y, x) });
        }
        scratch.sort_unstable();
        if scratch[..] < own[..] {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_of_tiny_classes() {
        // 0 edges: the point. 1 edge: a single edge. 2 edges: path, 2-banana.
        assert_eq!(connected_multigraphs_up_to(1).len(), 2);
        assert_eq!(connected_multigraphs_up_to(2).len(), 4);
        // 3 edges adds: 3-path, 3-star, triangle, 3-banana, and the
        // 2-banana with a pendant edge (on either side counts once)
        assert_eq!(connected_multigraphs_up_to(3).len(), 9);
    }

    #[test]
    fn no_duplicate_classes() {
        let graphs = connected_multigraphs_up_to(4);
        for (i, g) in graphs.iter().enumerate() {
            for h in &graphs[i + 1..] {
                assert!(
                    g.vertices() != h.vertices() || g.edges() != h.edges(),
                    "duplicate class: {g:?}"
                );
            }
        }
    }

    #[test]
    fn all_members_are_connected_and_loop_free() {
        for g in connected_multigraphs_up_to(4) {
            assert!(g.is_connected());
            assert!(g.edges().iter().all(|&(a, b)| a != b));
            assert!(g.edge_count() <= 4);
        }
    }
}
