//! The working coefficient ring: exact fractions in the Lefschetz class `L`
//! localized at `L` and `L^n - 1`, virtual sums of `L`-powers with their
//! symmetric-power zeta series, and closed-form classes of matrix groups,
//! rank strata, semisimple groups, and their classifying stacks.

mod k0;
mod mixed_tate;
mod rootdata;
mod sigma;

pub use k0::{
    class_gl, class_sl, class_sym_rank, K0Element, K0Error, LInvSeries, DEFAULT_LINV_ORDER,
};
pub use mixed_tate::{class_affine_space, class_projective_space, MixedTateClass};
pub use rootdata::{
    bruhat_class, builtin, builtin_names, class_bg_series, class_semisimple, weyl_enumerate,
    weyl_length_poly, weyl_poincare_check, RootDatumLite, WeylCheck, WEYL_BOUND,
};
pub use sigma::{macdonald_series, sigma_t, SigmaZeta};
