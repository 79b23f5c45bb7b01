//! Graph hypersurfaces: Kirchhoff polynomials, point counts over prime
//! fields, and polynomiality-in-p tests.
//!
//! The Kirchhoff (first Symanzik) polynomial of a connected multigraph is
//! computed by two independent routes — spanning-tree enumeration and the
//! weighted matrix-tree determinant — which are cross-checked on every call.
//! Point counts of the affine and projective hypersurfaces it defines feed a
//! Lagrange-interpolation test for polynomiality in the field size.

mod counting;
mod enumerate;
mod fit;
mod graph;
mod kirchhoff;

pub use counting::{
    affine_count_naive, affine_count_split, count_points, is_prime, CountError, CountRecord,
};
pub use enumerate::connected_multigraphs_up_to;
pub use fit::{
    first_primes, fit_report_from_counts, lagrange_interpolate, polynomiality_test, FitError,
    FitReport, FitStatus,
};
pub use graph::{Graph, GraphError, GraphFile, UnionFind};
pub use kirchhoff::{kirchhoff, kirchhoff_matrix_tree, kirchhoff_spanning_trees};
