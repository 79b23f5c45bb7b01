//! Equivariant zeta functions: finite group actions on curves over finite
//! fields, characters of the acting group, and the L-series attached to
//! each character.
//!
//! An action is a curve together with a validated character table and one
//! automorphism per group element. The L-series L(X, χ, t) is represented
//! through its counting avatar: the exponential of Σ νₙ(χ) tⁿ/n, where
//! νₙ(χ) = (1/|G|) Σ_g χ(g⁻¹)·♯Fix(gFⁿ) counts fixed points of group
//! elements twisted by Frobenius. This specialization is what the checks
//! consume — additivity in χ, compatibility with induction and inflation,
//! and the factorization Z(X, t) = ∏_χ L(X, χ, t)^{χ(1)} over the
//! irreducible characters, which recovers the zeta function itself from
//! the trivial group and refines it for larger ones.

mod action;
mod chartab;
mod lfunc;

pub use action::{ActionData, Automorphism};
pub use chartab::{
    add_class_functions, character_table_s3, character_table_trivial, character_table_v4,
    character_table_z2, induced_character, inflated_character, validate_quotient,
    validate_subgroup, ArtinError, CharacterData, CharacterFile, QuotientData, SubgroupData,
};
pub use lfunc::{
    artin_l, fix_count, fix_count_brute, formalism_check, nu_n, series_match, FormalismIdentity,
    FormalismOutcome, LSeries,
};
