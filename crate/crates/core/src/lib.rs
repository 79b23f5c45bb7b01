//! Exact-arithmetic toolkit for zeta functions of desk-scale arithmetic objects.
//!
//! The crate is organised in layers:
//!
//! * [`exactalg`] — arbitrary-precision rationals, sparse multivariate integer
//!   polynomials, truncated power series with exp/log, and rational functions
//!   with linear-algebra recognition of series.
//! * [`k0ring`] — mixed-Tate classes in the Grothendieck ring of varieties,
//!   written in the Lefschetz symbol `L`, with an explicit localization at
//!   `L` and `L^n - 1`, sigma-operations, and Weyl-group root data.
//! * [`graphzeta`] — Kirchhoff polynomials of multigraphs, point counts of the
//!   associated hypersurfaces over prime fields, and polynomiality fits.
//! * [`curvezeta`] — small finite fields, point counts of genus <= 1 curve
//!   models, Hasse-Weil zeta functions, and the two-variable Pellikaan zeta.
//! * [`motzeta`] — motivic zeta functions of Kimura-finite objects assembled
//!   from a mixed-Tate part and odd curve generators, with the Kahn
//!   functional-equation check and special values at `t = L^-d`.
//! * [`artinl`] — rational character tables, finite group actions on curves,
//!   twisted Frobenius fixed-point counts, and Artin L-series.
//! * [`bunstack`] — special-value products for bundle stacks and the Harder
//!   cross-check against finite-field mass formulas.
//! * [`periods`] — multiple zeta values by truncated nested sums and Feynman
//!   integrals over the simplex by seeded Monte Carlo.
//! * [`verify`] — the runnable acceptance suite shared by the CLI and the
//!   integration tests, together with the independent oracles it relies on.

pub mod exactalg;
pub mod k0ring;
pub mod graphzeta;
pub mod curvezeta;
pub mod motzeta;
pub mod artinl;
pub mod bunstack;
pub mod periods;
pub mod catalog;
pub mod verify;

mod budget;

pub use budget::{budget, BudgetError};
