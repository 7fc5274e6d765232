//! Left-hand sides: the Hurwitz zeta sums themselves, evaluated term by term
//! with a certified bound on the part that is not summed explicitly.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::closed::eulerian_row;
use crate::error::{domain, Error, Result};
use crate::series::{Kernel, LinearSeries, Strategy};
use crate::special::{require_above, require_positive, Tolerance};

/// Default cap on the number of explicitly summed terms.
pub const DEFAULT_TERM_BUDGET: u64 = 10_000_000;

/// Largest moment order accepted anywhere in the library.
pub const MAX_MOMENT: u32 = 12;

/// The sum families. `k` runs over `k >= 1` for the first seven and over
/// `k >= 0` for the last three.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Family {
    /// `sum zeta(s, k)`, `k >= 1`.
    Kappa,
    /// `sum (-1)^(k-1) zeta(s, k)`, `k >= 1`.
    KappaAlt,
    /// `sum zeta(s, k + a)`, `k >= 0`.
    Shifted,
    /// `sum (-1)^k zeta(s, k + a)`, `k >= 0`.
    ShiftedAlt,
    /// `sum k^m zeta(s, k)`, `k >= 1`.
    Moment,
    /// `sum (-1)^(k-1) k^m zeta(s, k)`, `k >= 1`.
    MomentAlt,
    /// `sum k^m zeta(s, 2k)`, `k >= 1`.
    EvenArgMoment,
    /// `sum zeta(s, ka + b)`, `k >= 0`.
    GeneralAb,
    /// `sum (-1)^k zeta(s, ka + b)`, `k >= 0`.
    GeneralAbAlt,
    /// `sum (+-1)^k e^(-ck) zeta(s, ka + b)`, `k >= 0`.
    ExpWeighted,
}

impl Family {
    pub const ALL: [Family; 10] = [
        Family::Kappa,
        Family::KappaAlt,
        Family::Shifted,
        Family::ShiftedAlt,
        Family::Moment,
        Family::MomentAlt,
        Family::EvenArgMoment,
        Family::GeneralAb,
        Family::GeneralAbAlt,
        Family::ExpWeighted,
    ];

    /// Command-line spelling, e.g. `general-ab`.
    pub fn slug(self) -> &'static str {
        match self {
            Family::Kappa => "kappa",
            Family::KappaAlt => "kappa-alt",
            Family::Shifted => "shifted",
            Family::ShiftedAlt => "shifted-alt",
            Family::Moment => "moment",
            Family::MomentAlt => "moment-alt",
            Family::EvenArgMoment => "even-arg-moment",
            Family::GeneralAb => "general-ab",
            Family::GeneralAbAlt => "general-ab-alt",
            Family::ExpWeighted => "exp-weighted",
        }
    }

    pub fn uses_moment(self) -> bool {
        matches!(self, Family::Moment | Family::MomentAlt | Family::EvenArgMoment)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.slug())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_lowercase().replace('_', "-");
        Family::ALL
            .into_iter()
            .find(|f| f.slug() == norm)
            .ok_or_else(|| domain("family", "one of kappa, kappa-alt, shifted, shifted-alt, moment, moment-alt, even-arg-moment, general-ab, general-ab-alt, exp-weighted", s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn is_minus(self) -> bool {
        self == Sign::Minus
    }
}

impl FromStr for Sign {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "plus" | "+" => Ok(Sign::Plus),
            "minus" | "-" => Ok(Sign::Minus),
            _ => Err(domain("sign", "plus or minus", s.to_string())),
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.is_minus() { "minus" } else { "plus" })
    }
}

/// How a [`SumResult`] was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Method {
    Direct,
    ClosedForm,
    Transformed,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Direct => "DIRECT",
            Method::ClosedForm => "CLOSED_FORM",
            Method::Transformed => "TRANSFORMED",
        })
    }
}

/// A sum to evaluate. Fields that a family does not use are ignored:
/// `m` only matters for the moment families, `a` for the shifted and
/// general families, `b`, `c` and `sign` for the general ones.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SumSpec {
    pub family: Family,
    pub s: f64,
    pub m: u32,
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub sign: Sign,
    pub tol: Tolerance,
}

impl SumSpec {
    pub fn new(family: Family, s: f64) -> Self {
        Self {
            family,
            s,
            m: 0,
            a: 1.0,
            b: 1.0,
            c: 0.0,
            sign: Sign::Plus,
            tol: Tolerance::default(),
        }
    }

    pub fn with_m(mut self, m: u32) -> Self {
        self.m = m;
        self
    }

    pub fn with_a(mut self, a: f64) -> Self {
        self.a = a;
        self
    }

    pub fn with_b(mut self, b: f64) -> Self {
        self.b = b;
        self
    }

    pub fn with_c(mut self, c: f64) -> Self {
        self.c = c;
        self
    }

    pub fn with_sign(mut self, sign: Sign) -> Self {
        self.sign = sign;
        self
    }

    pub fn with_tol(mut self, tol: Tolerance) -> Self {
        self.tol = tol;
        self
    }

    /// Whether the summand signs alternate.
    pub fn is_alternating(&self) -> bool {
        match self.family {
            Family::KappaAlt | Family::ShiftedAlt | Family::MomentAlt | Family::GeneralAbAlt => true,
            Family::ExpWeighted => self.sign.is_minus(),
            _ => false,
        }
    }

    /// Checks the convergence condition of the family and the parameter ranges.
    pub fn validate(&self) -> Result<()> {
        let ctx = self.family.slug();
        let s = self.s;
        let m = self.m;
        if self.family.uses_moment() && m > MAX_MOMENT {
            return Err(domain(ctx, format!("m <= {MAX_MOMENT}"), format!("m = {m}")));
        }
        let mf = m as f64;
        match self.family {
            Family::Kappa => require_above(ctx, "s", s, 2.0, "2")?,
            Family::KappaAlt => require_above(ctx, "s", s, 1.0, "1")?,
            Family::Shifted => {
                require_above(ctx, "s", s, 2.0, "2")?;
                require_positive(ctx, "a", self.a)?;
            }
            Family::ShiftedAlt => {
                require_above(ctx, "s", s, 1.0, "1")?;
                require_positive(ctx, "a", self.a)?;
            }
            Family::Moment | Family::EvenArgMoment => {
                require_above(ctx, "s", s, mf + 2.0, &format!("m+2 = {}", m + 2))?
            }
            Family::MomentAlt => require_above(ctx, "s", s, mf + 1.0, &format!("m+1 = {}", m + 1))?,
            Family::GeneralAb | Family::GeneralAbAlt | Family::ExpWeighted => {
                if self.family == Family::GeneralAb {
                    require_above(ctx, "s", s, 2.0, "2")?;
                } else {
                    require_above(ctx, "s", s, 1.0, "1")?;
                }
                require_positive(ctx, "a", self.a)?;
                require_positive(ctx, "b", self.b)?;
                if self.family == Family::ExpWeighted {
                    if !self.c.is_finite() || self.c < 0.0 {
                        return Err(domain(ctx, "c >= 0", format!("c = {}", self.c)));
                    }
                    if self.c == 0.0 && !self.sign.is_minus() {
                        require_above(ctx, "s", s, 2.0, "2 when c = 0 and sign = plus")?;
                    }
                }
            }
        }
        Ok(())
    }

    pub(crate) fn direct_series(&self) -> LinearSeries {
        let s = self.s;
        let hurwitz = |p: f64, q: f64, k0: u64| LinearSeries::new(Kernel::Hurwitz, s, p, q, k0);
        match self.family {
            Family::Kappa => hurwitz(1.0, 0.0, 1),
            Family::KappaAlt => hurwitz(1.0, 0.0, 1).alternating(true),
            Family::Shifted => hurwitz(1.0, self.a, 0),
            Family::ShiftedAlt => hurwitz(1.0, self.a, 0).alternating(true),
            Family::Moment => hurwitz(1.0, 0.0, 1).moment(self.m),
            Family::MomentAlt => hurwitz(1.0, 0.0, 1).moment(self.m).alternating(true),
            Family::EvenArgMoment => hurwitz(2.0, 0.0, 1).moment(self.m),
            Family::GeneralAb => hurwitz(self.a, self.b, 0),
            Family::GeneralAbAlt => hurwitz(self.a, self.b, 0).alternating(true),
            Family::ExpWeighted => hurwitz(self.a, self.b, 0)
                .weight(self.c)
                .alternating(self.sign.is_minus()),
        }
    }
}

/// Value of a sum together with its certified truncation bound.
///
/// `tail_bound` covers truncation and the inexactness of the individual zeta
/// evaluations; floating-point rounding in the final accumulation is not
/// included.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SumResult {
    pub value: f64,
    pub terms_used: u64,
    pub tail_bound: f64,
    pub method: Method,
}

/// How the unsummed remainder is handled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum TailMode {
    /// Euler–Maclaurin or Boole expansion when plain truncation would need
    /// more than 20 000 terms, truncation otherwise.
    #[default]
    Auto,
    /// Sum until a majorant of the remaining tail is below the budget.
    Truncate,
    /// Always sum a short head and expand the rest.
    EulerMaclaurin,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvalOptions {
    pub term_budget: u64,
    pub tail: TailMode,
}

impl Default for EvalOptions {
    fn default() -> Self {
        Self {
            term_budget: DEFAULT_TERM_BUDGET,
            tail: TailMode::Auto,
        }
    }
}

impl EvalOptions {
    pub fn truncating() -> Self {
        Self {
            tail: TailMode::Truncate,
            ..Self::default()
        }
    }

    pub fn with_budget(mut self, term_budget: u64) -> Self {
        self.term_budget = term_budget;
        self
    }

    pub(crate) fn strategy(&self) -> Strategy {
        match self.tail {
            TailMode::Auto => Strategy::Auto,
            TailMode::Truncate => Strategy::Truncate,
            TailMode::EulerMaclaurin => Strategy::Accelerate,
        }
    }
}

/// Evaluates the sum itself with default options.
pub fn eval_direct(spec: &SumSpec) -> Result<SumResult> {
    eval_direct_with(spec, &EvalOptions::default())
}

pub fn eval_direct_with(spec: &SumSpec, opts: &EvalOptions) -> Result<SumResult> {
    spec.validate()?;
    let out = spec
        .direct_series()
        .evaluate(spec.tol.abs_tol, opts.strategy(), opts.term_budget)?;
    Ok(SumResult {
        value: out.value,
        terms_used: out.terms,
        tail_bound: out.tail_bound,
        method: Method::Direct,
    })
}

fn check_inner(m: u32, x: f64) -> Result<()> {
    if m > MAX_MOMENT {
        return Err(domain(
            "inner_power_sum",
            format!("m <= {MAX_MOMENT}"),
            format!("m = {m}"),
        ));
    }
    require_positive("inner_power_sum", "x", x)
}

fn eval_poly(coeffs: &[f64], t: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * t + c)
}

/// `sum_{k>=1} k^m e^(-kx) = e^-x P_m(e^-x) / (1 - e^-x)^(m+1)` with the
/// Eulerian polynomial `P_m` (`P_0 = 1`).
pub fn inner_power_sum(m: u32, x: f64) -> Result<f64> {
    check_inner(m, x)?;
    let t = (-x).exp();
    let p = eval_poly(&eulerian_row(m), t);
    Ok(t * p / (-(-x).exp_m1()).powi(m as i32 + 1))
}

/// `sum_{k>=1} (-1)^(k-1) k^m e^(-kx) = e^-x P_m(-e^-x) / (1 + e^-x)^(m+1)`.
pub fn alternating_inner_power_sum(m: u32, x: f64) -> Result<f64> {
    check_inner(m, x)?;
    let t = (-x).exp();
    let p = eval_poly(&eulerian_row(m), -t);
    Ok(t * p / (1.0 + t).powi(m as i32 + 1))
}
