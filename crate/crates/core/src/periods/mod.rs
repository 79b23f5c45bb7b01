//! Numerical periods: multiple zeta values by truncated nested sums with
//! rigorous tail bounds, parametric Feynman integrals over the simplex by
//! seeded Monte Carlo with a quadrature cross-check, and the Γ-factor
//! relating the two standard normalizations of the parametric integral.
//!
//! This is the one floating-point corner of the crate; everything upstream
//! is exact. Estimates carry their error model (truncation bound or Monte
//! Carlo standard error) and the simplex measure convention explicitly.

mod gamma;
mod mc;
mod mzv;

use crate::budget::BudgetError;
use crate::graphzeta::GraphError;
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum PeriodsError {
    #[error("invalid multiple zeta index: {0}")]
    InvalidIndex(String),
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("gamma pole at {at}: nonpositive integer argument")]
    GammaPole { at: f64 },
    #[error("{bad} of {total} integrand samples were non-finite")]
    BadSamples { bad: u64, total: u64 },
    #[error("{0}")]
    Budget(#[from] BudgetError),
    #[error("{0}")]
    Graph(#[from] GraphError),
}

pub use gamma::{gamma, i_gamma_prefactor};
pub use mc::{
    feynman_j, feynman_j_quadrature, feynman_j_slope, McEstimate, CONVENTION_NOTE,
};
pub use mzv::{mzv, MzvIndex};
