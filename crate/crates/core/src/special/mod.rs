//! Double-precision special functions and exact coefficient tables.
//!
//! Everything here works on the real line only. Domain conditions are strict
//! inequalities, and a parameter within [`DOMAIN_MARGIN`] of a boundary is
//! rejected rather than clamped.

mod bernoulli;
mod coeffs;
mod expint;
mod gamma;
mod lerch;
mod zeta;

pub use bernoulli::{bernoulli_f64, bernoulli_numbers, MAX_BERNOULLI_INDEX};
pub use coeffs::RationalCoeffs;
pub use gamma::{gamma_fn, pochhammer};
pub use lerch::lerch_phi;
pub use zeta::{dirichlet_eta, hurwitz_tail_bound, hurwitz_zeta, riemann_zeta};

pub(crate) use bernoulli::bernoulli_exact;
pub(crate) use coeffs::{rational_string, rational_to_f64};
pub(crate) use lerch::lerch_phi_eps;
pub(crate) use zeta::{half_difference_eps, hurwitz_eps};

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};

/// Parameters closer than this to a domain boundary are rejected.
pub const DOMAIN_MARGIN: f64 = 1e-12;

/// Requested accuracy. `abs_tol` is the certified truncation budget;
/// `rel_tol` is carried along for reporting only.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerance {
    pub abs_tol: f64,
    pub rel_tol: f64,
}

impl Tolerance {
    /// Smallest accepted absolute tolerance, 2^-52.
    pub const MIN_ABS: f64 = f64::EPSILON;

    pub fn new(abs_tol: f64, rel_tol: f64) -> Result<Self> {
        if !abs_tol.is_finite() || abs_tol < Self::MIN_ABS {
            return Err(domain(
                "tolerance",
                "abs_tol >= 2^-52 and finite",
                format!("{abs_tol:e}"),
            ));
        }
        if !rel_tol.is_finite() || rel_tol < 0.0 {
            return Err(domain("tolerance", "rel_tol >= 0 and finite", format!("{rel_tol:e}")));
        }
        Ok(Self { abs_tol, rel_tol })
    }

    pub fn absolute(abs_tol: f64) -> Result<Self> {
        Self::new(abs_tol, 0.0)
    }

    /// Divides the absolute budget, e.g. to hand part of it to a sub-computation.
    /// The result may go below 2^-52; it is only used internally.
    pub(crate) fn scaled(self, factor: f64) -> f64 {
        self.abs_tol * factor
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Self {
            abs_tol: 1e-10,
            rel_tol: 0.0,
        }
    }
}

pub(crate) fn require_above(
    context: &'static str,
    name: &str,
    value: f64,
    bound: f64,
    bound_label: &str,
) -> Result<()> {
    if value.is_finite() && value > bound + DOMAIN_MARGIN {
        Ok(())
    } else {
        Err(domain(
            context,
            format!("{name} > {bound_label}"),
            format!("{name} = {value}"),
        ))
    }
}

pub(crate) fn require_positive(context: &'static str, name: &str, value: f64) -> Result<()> {
    require_above(context, name, value, 0.0, "0")
}
