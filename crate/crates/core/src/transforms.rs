//! Parameter-inverted representations of `sum (+-1)^k e^(-ck) zeta(s, ka+b)`.
//!
//! With `a` small the original series converges slowly (its terms decay like
//! `(ka)^(1-s)`), while the inverted series runs over arguments `(n+b)/a` and
//! converges quickly:
//!
//! ```text
//! sum_k         zeta(s, ka+b) = a^-s      sum_n zeta(s, (n+b)/a)
//! sum_k (-1)^k  zeta(s, ka+b) = (2a)^-s   sum_n [zeta(s, (n+b)/2a) - zeta(s, (n+b)/2a + 1/2)]
//! sum_k (+-1)^k e^(-ck) zeta(s, ka+b) = a^-s sum_n Phi(+-e^-c, s, (n+b)/a)
//! ```

use serde::{Deserialize, Serialize};

use crate::closed::eval_closed;
use crate::direct::{eval_direct_with, EvalOptions, Family, Method, Sign, SumResult, SumSpec};
use crate::error::{domain, Error, Result};
use crate::series::{Kernel, LinearSeries};
use crate::special::{require_above, require_positive, Tolerance};

/// Outcome of evaluating both sides of a transformation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TransformReport {
    pub lhs_value: f64,
    pub rhs_value: f64,
    pub lhs_terms: u64,
    pub rhs_terms: u64,
    /// `|lhs_value - rhs_value|`.
    pub agreement: f64,
    /// `lhs_terms / rhs_terms`.
    pub speedup_estimate: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Side {
    Direct,
    Transformed,
}

fn check_general(ctx: &'static str, s: f64, s_min: f64, s_label: &str, a: f64, b: f64) -> Result<()> {
    require_above(ctx, "s", s, s_min, s_label)?;
    require_positive(ctx, "a", a)?;
    require_positive(ctx, "b", b)
}

fn plus_series(s: f64, a: f64, b: f64) -> LinearSeries {
    LinearSeries::new(Kernel::Hurwitz, s, 1.0 / a, b / a, 0).scaled(a.powf(-s))
}

fn minus_series(s: f64, a: f64, b: f64) -> LinearSeries {
    LinearSeries::new(Kernel::HalfDiff, s, 0.5 / a, 0.5 * b / a, 0).scaled((2.0 * a).powf(-s))
}

/// The inverted series for a general-family spec. At `c = 0` the weighted
/// family is mapped onto the unweighted series, since `Phi(1, s, y)` and
/// `Phi(-1, s, y)` are Hurwitz values.
pub(crate) fn transformed_series(spec: &SumSpec) -> Result<LinearSeries> {
    let (s, a, b) = (spec.s, spec.a, spec.b);
    match spec.family {
        Family::GeneralAb => Ok(plus_series(s, a, b)),
        Family::GeneralAbAlt => Ok(minus_series(s, a, b)),
        Family::ExpWeighted if spec.c == 0.0 => Ok(if spec.sign.is_minus() {
            minus_series(s, a, b)
        } else {
            plus_series(s, a, b)
        }),
        Family::ExpWeighted => {
            let z = if spec.sign.is_minus() {
                -(-spec.c).exp()
            } else {
                (-spec.c).exp()
            };
            Ok(LinearSeries::new(Kernel::Lerch(z), s, 1.0 / a, b / a, 0).scaled(a.powf(-s)))
        }
        other => Err(domain(
            "transforms",
            "family general-ab, general-ab-alt or exp-weighted",
            other.slug().to_string(),
        )),
    }
}

/// Evaluates the inverted right-hand side for a general-family spec.
pub fn eval_transformed(spec: &SumSpec, opts: &EvalOptions) -> Result<SumResult> {
    spec.validate()?;
    let out = transformed_series(spec)?.evaluate(spec.tol.abs_tol, opts.strategy(), opts.term_budget)?;
    Ok(SumResult {
        value: out.value,
        terms_used: out.terms,
        tail_bound: out.tail_bound,
        method: Method::Transformed,
    })
}

/// `a^-s sum_{n>=0} zeta(s, (n+b)/a)`, equal to `sum_{k>=0} zeta(s, ka+b)`
/// for `s > 2`.
pub fn kappa_ab_transformed(s: f64, a: f64, b: f64, tol: Tolerance) -> Result<SumResult> {
    check_general("kappa_ab_transformed", s, 2.0, "2", a, b)?;
    let spec = SumSpec::new(Family::GeneralAb, s).with_a(a).with_b(b).with_tol(tol);
    eval_transformed(&spec, &EvalOptions::default())
}

/// `(2a)^-s sum_{n>=0} [zeta(s, (n+b)/2a) - zeta(s, (n+b)/2a + 1/2)]`, equal
/// to `sum_{k>=0} (-1)^k zeta(s, ka+b)` for `s > 1`.
pub fn kappa_ab_alt_transformed(s: f64, a: f64, b: f64, tol: Tolerance) -> Result<SumResult> {
    check_general("kappa_ab_alt_transformed", s, 1.0, "1", a, b)?;
    let spec = SumSpec::new(Family::GeneralAbAlt, s).with_a(a).with_b(b).with_tol(tol);
    eval_transformed(&spec, &EvalOptions::default())
}

/// The `b = a` case, re-indexed to start at `k = 1`:
/// `sum_{k>=1} zeta(s, ka) = a^-s sum_n zeta(s, n/a + 1)` (`s > 2`) and
/// `sum_{k>=1} (-1)^(k-1) zeta(s, ka) = (2a)^-s sum_n [zeta(s, n/2a + 1/2) - zeta(s, n/2a + 1)]` (`s > 1`).
pub fn corollary_b_equals_a(s: f64, a: f64, sign: Sign, tol: Tolerance) -> Result<SumResult> {
    let series = corollary_series(s, a, sign)?;
    let out = series.evaluate(
        tol.abs_tol,
        EvalOptions::default().strategy(),
        EvalOptions::default().term_budget,
    )?;
    Ok(SumResult {
        value: out.value,
        terms_used: out.terms,
        tail_bound: out.tail_bound,
        method: Method::Transformed,
    })
}

fn corollary_series(s: f64, a: f64, sign: Sign) -> Result<LinearSeries> {
    let ctx = "corollary_b_equals_a";
    if sign.is_minus() {
        require_above(ctx, "s", s, 1.0, "1 for the alternating sum")?;
    } else {
        require_above(ctx, "s", s, 2.0, "2 for the plain sum")?;
    }
    require_positive(ctx, "a", a)?;
    Ok(if sign.is_minus() {
        LinearSeries::new(Kernel::HalfDiff, s, 0.5 / a, 0.5, 0).scaled((2.0 * a).powf(-s))
    } else {
        LinearSeries::new(Kernel::Hurwitz, s, 1.0 / a, 1.0, 0).scaled(a.powf(-s))
    })
}

/// `a^-s sum_{n>=0} Phi(+-e^-c, s, (n+b)/a)`, equal to
/// `sum_{k>=0} (+-1)^k e^(-ck) zeta(s, ka+b)` for `s > 1`, `c >= 0` (and
/// `s > 2` when `c = 0` with the plus sign).
pub fn s_pm_transformed(s: f64, a: f64, b: f64, c: f64, sign: Sign, tol: Tolerance) -> Result<SumResult> {
    let spec = SumSpec::new(Family::ExpWeighted, s)
        .with_a(a)
        .with_b(b)
        .with_c(c)
        .with_sign(sign)
        .with_tol(tol);
    eval_transformed(&spec, &EvalOptions::default())
}

fn saturating_count(x: f64) -> u64 {
    if x.is_finite() && x < u64::MAX as f64 {
        x.max(1.0) as u64
    } else {
        u64::MAX
    }
}

/// Number of terms the truncating evaluator needs on the given side of
/// `sum_k zeta(s, ka+b)`. The prediction uses the same closed-form tail
/// majorant as the evaluator, so it matches `terms_used` of a truncating run.
pub fn term_count_estimate(s: f64, a: f64, b: f64, tol: Tolerance, side: Side) -> Result<u64> {
    check_general("term_count_estimate", s, 2.0, "2", a, b)?;
    let spec = SumSpec::new(Family::GeneralAb, s).with_a(a).with_b(b).with_tol(tol);
    Ok(saturating_count(
        side_series(&spec, side)?.truncation_terms(tol.abs_tol),
    ))
}

fn side_series(spec: &SumSpec, side: Side) -> Result<LinearSeries> {
    match side {
        Side::Direct => Ok(spec.direct_series()),
        Side::Transformed => transformed_series(spec),
    }
}

/// Picks the side with the smaller predicted truncation count; ties go to
/// the transformed side.
pub fn choose_method(spec: &SumSpec) -> Result<Method> {
    if !matches!(
        spec.family,
        Family::GeneralAb | Family::GeneralAbAlt | Family::ExpWeighted
    ) {
        return Err(domain(
            "choose_method",
            "family general-ab, general-ab-alt or exp-weighted",
            spec.family.slug().to_string(),
        ));
    }
    spec.validate()?;
    let tol = spec.tol.abs_tol;
    let direct = side_series(spec, Side::Direct)?.truncation_terms(tol);
    let transformed = side_series(spec, Side::Transformed)?.truncation_terms(tol);
    Ok(if transformed <= direct {
        Method::Transformed
    } else {
        Method::Direct
    })
}

/// Evaluates both sides with the same options and reports their agreement.
pub fn compare_sides(spec: &SumSpec, opts: &EvalOptions) -> Result<TransformReport> {
    let lhs = eval_direct_with(spec, opts)?;
    let rhs = eval_transformed(spec, opts)?;
    Ok(TransformReport {
        lhs_value: lhs.value,
        rhs_value: rhs.value,
        lhs_terms: lhs.terms_used,
        rhs_terms: rhs.terms_used,
        agreement: (lhs.value - rhs.value).abs(),
        speedup_estimate: lhs.terms_used as f64 / rhs.terms_used as f64,
    })
}

/// Evaluates a spec by the cheapest available route: the closed form when
/// one exists, otherwise the side picked by [`choose_method`].
pub fn eval_auto(spec: &SumSpec, opts: &EvalOptions) -> Result<SumResult> {
    match eval_closed(spec) {
        Err(Error::NoClosedForm { .. }) => {}
        other => return other,
    }
    match choose_method(spec)? {
        Method::Transformed => eval_transformed(spec, opts),
        _ => eval_direct_with(spec, opts),
    }
}
