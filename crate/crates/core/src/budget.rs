//! Global enumeration budget, overridable through `MOTZETA_BUDGET`.

use thiserror::Error;

/// Default cap on exhaustive enumerations (field sizes, point grids). Sized
/// so the full bundled-catalog prime sweep fits without an override.
pub const DEFAULT_BUDGET: u64 = 1 << 36;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error("enumeration of size {need} exceeds the budget of {budget} (raise MOTZETA_BUDGET to override)")]
pub struct BudgetError {
    pub need: u128,
    pub budget: u64,
}

/// Current enumeration budget: `MOTZETA_BUDGET` when set, else the default.
pub fn budget() -> u64 {
    std::env::var("MOTZETA_BUDGET")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_BUDGET)
}

/// Checks `need` against the budget.
pub fn check(need: u128) -> Result<(), BudgetError> {
    let b = budget();
    if need > b as u128 {
        Err(BudgetError { need, budget: b })
    } else {
        Ok(())
    }
}
