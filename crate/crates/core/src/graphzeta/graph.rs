//! Finite multigraphs with a stable edge order.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge {index} is a self-loop at vertex {vertex}")]
    SelfLoop { index: usize, vertex: usize },
    #[error("edge {index} references vertex {vertex} but there are only {vertices} vertices")]
    BadEndpoint {
        index: usize,
        vertex: usize,
        vertices: usize,
    },
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("operation requires a connected graph")]
    Disconnected,
    #[error("invalid graph JSON: {0}")]
    Json(String),
}

#[derive(Serialize, Deserialize)]
pub struct GraphFile {
    vertices: usize,
    edges: Vec<(usize, usize)>,
}

/// A multigraph without self-loops; edges keep their input order, which
/// fixes the variable order of the Kirchhoff polynomial.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    vertices: usize,
    edges: Vec<(usize, usize)>,
    connected: bool,
    b1: usize,
}

impl Graph {
    pub fn new(vertices: usize, edges: Vec<(usize, usize)>) -> Result<Self, GraphError> {
        if vertices == 0 {
            return Err(GraphError::Empty);
        }
        for (index, &(u, v)) in edges.iter().enumerate() {
            if u == v {
                return Err(GraphError::SelfLoop { index, vertex: u });
            }
            for w in [u, v] {
                if w >= vertices {
                    return Err(GraphError::BadEndpoint {
                        index,
                        vertex: w,
                        vertices,
                    });
                }
            }
        }
        let components = count_components(vertices, &edges);
        let connected = components == 1;
        let b1 = edges.len() + components - vertices;
        Ok(Graph {
            vertices,
            edges,
            connected,
            b1,
        })
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_connected(&self) -> bool {
        self.connected
    }

    /// First Betti number `|E| - |V| + #components`.
    pub fn b1(&self) -> usize {
        self.b1
    }

    /// Removes edge `e`, keeping the order of the others.
    pub fn delete_edge(&self, e: usize) -> Graph {
        let mut edges = self.edges.clone();
        edges.remove(e);
        Graph::new(self.vertices, edges).expect("deletion preserves validity")
    }

    /// Contracts edge `e`: its endpoints merge (parallel edges survive,
    /// loops created by the contraction are dropped with the edge itself).
    pub fn contract_edge(&self, e: usize) -> Graph {
        let (a, b) = self.edges[e];
        let (keep, gone) = if a < b { (a, b) } else { (b, a) };
        let relabel = |v: usize| {
            let v = if v == gone { keep } else { v };
            if v > gone {
                v - 1
            } else {
                v
            }
        };
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != e)
            .map(|(_, &(u, v))| (relabel(u), relabel(v)))
            .filter(|&(u, v)| u != v)
            .collect();
        Graph::new(self.vertices - 1, edges).expect("contraction preserves validity")
    }

    /// An edge is a bridge when deleting it disconnects its component.
    pub fn is_bridge(&self, e: usize) -> bool {
        let deleted = self.delete_edge(e);
        count_components(deleted.vertices, &deleted.edges)
            > count_components(self.vertices, &self.edges)
    }

    pub fn from_json_str(s: &str) -> Result<Self, GraphError> {
        let f: GraphFile =
            serde_json::from_str(s).map_err(|e| GraphError::Json(e.to_string()))?;
        Graph::new(f.vertices, f.edges)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&GraphFile {
            vertices: self.vertices,
            edges: self.edges.clone(),
        })
        .expect("graph serialization cannot fail")
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(v={}, edges={:?})", self.vertices, self.edges)
    }
}

fn count_components(vertices: usize, edges: &[(usize, usize)]) -> usize {
    let mut uf = UnionFind::new(vertices);
    for &(u, v) in edges {
        uf.union(u, v);
    }
    uf.components()
}

/// Plain union-find with path compression, enough for edge-set connectivity.
pub struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when `a` and `b` were already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }

    pub fn components(&mut self) -> usize {
        (0..self.parent.len())
            .filter(|&i| self.find(i) == i)
            .count()
    }
}
