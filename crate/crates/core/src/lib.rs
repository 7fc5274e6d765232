//! Series of Hurwitz zeta values: direct summation with certified tails,
//! zeta-combination closed forms, and parameter-inverted transformations
//! that accelerate `sum_k zeta(s, ka+b)` when `a` is small.

pub mod error;
pub mod special;

mod closed;
mod direct;
mod identity;
mod oracles;
mod series;
mod transforms;

/// Independent reference computations used to cross-check the evaluators.
pub mod verification {
    pub use crate::oracles::*;
}

pub use closed::{
    combination_split, eulerian_polynomial, eval_closed, even_arg_moment_closed, even_arg_moment_combination,
    faulhaber_coeffs, kappa_alt_closed, kappa_alt_combination, kappa_closed, kappa_combination, moment_alt_closed,
    moment_alt_combination, moment_closed, moment_combination, shifted_alt_closed, shifted_alt_combination,
    shifted_closed, shifted_combination, ZetaCombination, ZetaKind, ZetaTerm,
};
pub use direct::{
    alternating_inner_power_sum, eval_direct, eval_direct_with, inner_power_sum, EvalOptions, Family, Method, Sign,
    SumResult, SumSpec, TailMode, DEFAULT_TERM_BUDGET, MAX_MOMENT,
};
pub use error::{Error, Result};
pub use identity::{check_identity, Identity, IdentityPoint, IdentityReport};
pub use special::{RationalCoeffs, Tolerance};
pub use transforms::{
    choose_method, compare_sides, corollary_b_equals_a, eval_auto, eval_transformed, kappa_ab_alt_transformed,
    kappa_ab_transformed, s_pm_transformed, term_count_estimate, Side, TransformReport,
};
