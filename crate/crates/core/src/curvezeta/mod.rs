//! Curves over finite fields: deterministic field towers, exhaustive point
//! counts, Hasse–Weil zeta functions with their functional equation, and
//! Pellikaan's two-variable zeta in genus ≤ 1.

mod curve;
mod field;
mod pellikaan;
mod zeta;

pub use curve::{count_curve, CurveData, CurveError, CurveFile, CurveModel};
pub use field::{field_make, FieldError, FiniteField, FqElem};
pub use pellikaan::{pellikaan_zeta, quantum_integer, specialize_u, u_var, TwoVarZeta, UFunc};
pub use zeta::{
    expected_counts, functional_equation_check, hasse_weil, zeta_series_from_counts, FeCheck,
    ZetaData,
};
