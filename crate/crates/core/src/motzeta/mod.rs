//! Motivic zeta functions of Kimura-finite objects.
//!
//! Kapranov's zeta taken in the ring of varieties is not rational in general
//! (Larsen–Lunts), so this module works one level up, with symbols for
//! finite-dimensional motives: an even part that is mixed Tate plus opaque
//! odd generators carrying their own zeta polynomials. At that level the
//! zeta is rational by construction, satisfies the Kahn functional equation,
//! and admits exact special values at negative Lefschetz powers.

mod kimura;
mod zeta;

pub use kimura::{a_symbol, APoly, K0Coeff, KimuraObject, MotiveError, OddGenerator};
pub use zeta::{kahn_check, special_value, zeta_mot, KahnCheck, MotZeta};
