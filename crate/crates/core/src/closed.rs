//! Closed-form right-hand sides as exact rational combinations of zeta values,
//! and the Eulerian and Faulhaber coefficient families behind them.

use std::fmt;

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::direct::{Family, Method, SumResult, SumSpec, MAX_MOMENT};
use crate::error::{domain, Error, Result};
use crate::special::{
    bernoulli_exact, hurwitz_eps, rational_string, rational_to_f64, require_above, require_positive, RationalCoeffs,
    Tolerance,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ZetaKind {
    Zeta,
    Hurwitz,
}

/// One summand `coefficient * [2^-s] * [alpha] * zeta(s - s_shift, alpha)`.
/// The bracketed factors are present when `pow2_neg_s` / `alpha_weight` are
/// set; `ZETA` terms have `alpha = 1` implicitly.
#[derive(Debug, Clone, PartialEq)]
pub struct ZetaTerm {
    pub coefficient: BigRational,
    pub pow2_neg_s: bool,
    pub alpha_weight: bool,
    pub kind: ZetaKind,
    pub s_shift: u32,
    pub alpha: Option<f64>,
}

impl ZetaTerm {
    fn zeta(num: i64, den: i64, s_shift: u32) -> Self {
        Self {
            coefficient: BigRational::new(num.into(), den.into()),
            pow2_neg_s: false,
            alpha_weight: false,
            kind: ZetaKind::Zeta,
            s_shift,
            alpha: None,
        }
    }

    fn hurwitz(num: i64, den: i64, s_shift: u32, alpha: f64) -> Self {
        Self {
            kind: ZetaKind::Hurwitz,
            alpha: Some(alpha),
            ..Self::zeta(num, den, s_shift)
        }
    }

    fn halved(mut self) -> Self {
        self.pow2_neg_s = true;
        self
    }

    fn weighted(mut self) -> Self {
        self.alpha_weight = true;
        self
    }

    fn alpha_value(&self) -> f64 {
        self.alpha.unwrap_or(1.0)
    }

    /// The real factor multiplying the zeta value at `s`.
    fn factor(&self, s: f64) -> f64 {
        let mut f = rational_to_f64(&self.coefficient);
        if self.pow2_neg_s {
            f *= (-s * std::f64::consts::LN_2).exp();
        }
        if self.alpha_weight {
            f *= self.alpha_value();
        }
        f
    }
}

impl Serialize for ZetaTerm {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("ZetaTerm", 6)?;
        st.serialize_field("coefficient", &rational_string(&self.coefficient))?;
        st.serialize_field("pow2_neg_s", &self.pow2_neg_s)?;
        st.serialize_field("alpha_weight", &self.alpha_weight)?;
        st.serialize_field("kind", &self.kind)?;
        st.serialize_field("s_shift", &self.s_shift)?;
        st.serialize_field("alpha", &self.alpha)?;
        st.end()
    }
}

impl fmt::Display for ZetaTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", rational_string(&self.coefficient))?;
        if self.pow2_neg_s {
            f.write_str("*2^-s")?;
        }
        if self.alpha_weight {
            write!(f, "*{}", self.alpha_value())?;
        }
        let arg = if self.s_shift == 0 {
            "s".to_string()
        } else {
            format!("s-{}", self.s_shift)
        };
        match self.kind {
            ZetaKind::Zeta => write!(f, "*zeta({arg})"),
            ZetaKind::Hurwitz => write!(f, "*zeta({arg}, {})", self.alpha_value()),
        }
    }
}

/// A rational-linear combination of zeta values, evaluable at any `s` where
/// every constituent converges.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ZetaCombination {
    pub terms: Vec<ZetaTerm>,
}

impl ZetaCombination {
    fn new(terms: Vec<ZetaTerm>) -> Self {
        let terms = terms.into_iter().filter(|t| !t.coefficient.is_zero()).collect();
        Self { terms }
    }

    /// Every constituent needs `s - s_shift > 1`.
    pub fn min_s(&self) -> f64 {
        self.terms.iter().map(|t| t.s_shift as f64 + 1.0).fold(1.0, f64::max)
    }

    /// Sum of the evaluated terms; each zeta value gets an equal share of
    /// `tol.abs_tol` after scaling by its factor.
    pub fn evaluate(&self, s: f64, tol: Tolerance) -> Result<f64> {
        let n = self.terms.len().max(1) as f64;
        let mut total = 0.0;
        for t in &self.terms {
            let factor = t.factor(s);
            let eps = tol.scaled(1.0 / n) / factor.abs().max(f64::MIN_POSITIVE);
            let arg = s - t.s_shift as f64;
            total += factor * hurwitz_eps(arg, t.alpha_value(), eps)?;
        }
        Ok(total)
    }
}

impl fmt::Display for ZetaCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

/// Eulerian numbers `A(m, 0..m)`, with `A(0, .) = [1]`.
fn eulerian_numbers(m: u32) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for n in 2..=m as usize {
        let mut next = vec![BigInt::zero(); n];
        for (j, slot) in next.iter_mut().enumerate() {
            if j < row.len() {
                *slot += BigInt::from(j + 1) * &row[j];
            }
            if j >= 1 {
                *slot += BigInt::from(n - j) * &row[j - 1];
            }
        }
        row = next;
    }
    row
}

pub(crate) fn eulerian_row(m: u32) -> Vec<f64> {
    eulerian_numbers(m)
        .iter()
        .map(|a| rational_to_f64(&BigRational::from_integer(a.clone())))
        .collect()
}

/// Coefficients of the Eulerian polynomial `P_m` in ascending powers, defined
/// by `sum_{k>=1} k^m t^k = t P_m(t) / (1-t)^(m+1)`, for `1 <= m <= 12`.
pub fn eulerian_polynomial(m: u32) -> Result<RationalCoeffs> {
    if !(1..=MAX_MOMENT).contains(&m) {
        return Err(domain(
            "eulerian_polynomial",
            format!("1 <= m <= {MAX_MOMENT}"),
            format!("m = {m}"),
        ));
    }
    Ok(RationalCoeffs::from_integers(eulerian_numbers(m), 0))
}

/// Coefficients of `S_m(n) = sum_{k=1}^n k^m` as a polynomial in `n`, from
/// `n^1` up to `n^(m+1)` (the constant term is zero), for `0 <= m <= 12`.
pub fn faulhaber_coeffs(m: u32) -> Result<RationalCoeffs> {
    if m > MAX_MOMENT {
        return Err(domain(
            "faulhaber_coeffs",
            format!("0 <= m <= {MAX_MOMENT}"),
            format!("m = {m}"),
        ));
    }
    let m = m as usize;
    // S_m(n) = 1/(m+1) sum_j C(m+1, j) (-1)^j B_j n^(m+1-j)
    let mut coeffs = vec![BigRational::zero(); m + 1];
    let scale = BigRational::new(BigInt::one(), BigInt::from(m + 1));
    for j in 0..=m {
        let mut c = BigRational::from_integer(binomial(BigInt::from(m + 1), BigInt::from(j))) * bernoulli_exact(j);
        if j % 2 == 1 {
            c = -c;
        }
        coeffs[m - j] = c * &scale;
    }
    Ok(RationalCoeffs::new(coeffs, 1))
}

fn combination_domain(ctx: &'static str, s: f64, threshold: f64, label: &str) -> Result<()> {
    require_above(ctx, "s", s, threshold, label)
}

/// `zeta(s-1)`.
pub fn kappa_combination() -> ZetaCombination {
    ZetaCombination::new(vec![ZetaTerm::zeta(1, 1, 1)])
}

/// `(1 - 2^-s) zeta(s)`.
pub fn kappa_alt_combination() -> ZetaCombination {
    ZetaCombination::new(vec![ZetaTerm::zeta(1, 1, 0), ZetaTerm::zeta(-1, 1, 0).halved()])
}

/// `zeta(s-1, a) + (1 - a) zeta(s, a)`.
pub fn shifted_combination(a: f64) -> ZetaCombination {
    ZetaCombination::new(vec![
        ZetaTerm::hurwitz(1, 1, 1, a),
        ZetaTerm::hurwitz(1, 1, 0, a),
        ZetaTerm::hurwitz(-1, 1, 0, a).weighted(),
    ])
}

/// `2^-s zeta(s, a/2)`.
pub fn shifted_alt_combination(a: f64) -> ZetaCombination {
    ZetaCombination::new(vec![ZetaTerm::hurwitz(1, 1, 0, 0.5 * a).halved()])
}

/// `sum_j c_j zeta(s - j)` with the Faulhaber coefficients `c_j` of `S_m`.
pub fn moment_combination(m: u32) -> Result<ZetaCombination> {
    let f = faulhaber_coeffs(m)?;
    let terms = f
        .coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| ZetaTerm {
            coefficient: c.clone(),
            ..ZetaTerm::zeta(1, 1, i as u32 + 1)
        })
        .collect();
    Ok(ZetaCombination::new(terms))
}

/// Closed forms of `sum (-1)^(k-1) k^m zeta(s, k)`, known for `m = 1, 2` only.
pub fn moment_alt_combination(m: u32) -> Result<ZetaCombination> {
    match m {
        // 2^-s { zeta(s-1, 1/2) + zeta(s, 1/2)/2 - zeta(s-1) }
        1 => Ok(ZetaCombination::new(vec![
            ZetaTerm::hurwitz(1, 1, 1, 0.5).halved(),
            ZetaTerm::hurwitz(1, 2, 0, 0.5).halved(),
            ZetaTerm::zeta(-1, 1, 1).halved(),
        ])),
        // { (1 - 2^(2-s)) zeta(s-1) + (1 - 2^(3-s)) zeta(s-2) } / 2
        2 => Ok(ZetaCombination::new(vec![
            ZetaTerm::zeta(1, 2, 1),
            ZetaTerm::zeta(-2, 1, 1).halved(),
            ZetaTerm::zeta(1, 2, 2),
            ZetaTerm::zeta(-4, 1, 2).halved(),
        ])),
        _ => Err(Error::NoClosedForm {
            what: format!("the alternating moment sum with m = {m} (only m = 1, 2 are known)"),
        }),
    }
}

/// Closed forms of `sum k^m zeta(s, 2k)`, known for `m = 1, 2` only.
pub fn even_arg_moment_combination(m: u32) -> Result<ZetaCombination> {
    match m {
        // { (1 + 2^(1-s)) zeta(s-1) + zeta(s-2) - 2^(1-s) (zeta(s-1, 1/2) + zeta(s, 1/2)/2) } / 8
        1 => Ok(ZetaCombination::new(vec![
            ZetaTerm::zeta(1, 8, 1),
            ZetaTerm::zeta(1, 4, 1).halved(),
            ZetaTerm::zeta(1, 8, 2),
            ZetaTerm::hurwitz(-1, 4, 1, 0.5).halved(),
            ZetaTerm::hurwitz(-1, 8, 0, 0.5).halved(),
        ])),
        // { (3 2^(1-s) - 1) zeta(s-1) + 6 2^(1-s) zeta(s-2) + zeta(s-3) } / 24
        2 => Ok(ZetaCombination::new(vec![
            ZetaTerm::zeta(1, 4, 1).halved(),
            ZetaTerm::zeta(-1, 24, 1),
            ZetaTerm::zeta(1, 2, 2).halved(),
            ZetaTerm::zeta(1, 24, 3),
        ])),
        _ => Err(Error::NoClosedForm {
            what: format!("the even-argument moment sum with m = {m} (only m = 1, 2 are known)"),
        }),
    }
}

/// `sum_{k>=1} zeta(s, k) = zeta(s-1)` for `s > 2`.
pub fn kappa_closed(s: f64, tol: Tolerance) -> Result<f64> {
    combination_domain("kappa_closed", s, 2.0, "2")?;
    kappa_combination().evaluate(s, tol)
}

/// `sum_{k>=1} (-1)^(k-1) zeta(s, k) = (1 - 2^-s) zeta(s)` for `s > 1`.
pub fn kappa_alt_closed(s: f64, tol: Tolerance) -> Result<f64> {
    combination_domain("kappa_alt_closed", s, 1.0, "1")?;
    kappa_alt_combination().evaluate(s, tol)
}

/// `sum_{k>=0} zeta(s, k+a) = zeta(s-1, a) + (1-a) zeta(s, a)` for `s > 2`.
pub fn shifted_closed(s: f64, a: f64, tol: Tolerance) -> Result<f64> {
    combination_domain("shifted_closed", s, 2.0, "2")?;
    require_positive("shifted_closed", "a", a)?;
    shifted_combination(a).evaluate(s, tol)
}

/// `sum_{k>=0} (-1)^k zeta(s, k+a) = 2^-s zeta(s, a/2)` for `s > 1`.
pub fn shifted_alt_closed(s: f64, a: f64, tol: Tolerance) -> Result<f64> {
    combination_domain("shifted_alt_closed", s, 1.0, "1")?;
    require_positive("shifted_alt_closed", "a", a)?;
    shifted_alt_combination(a).evaluate(s, tol)
}

/// `sum_{k>=1} k^m zeta(s, k)` for `s > m+2`, `0 <= m <= 12`.
pub fn moment_closed(s: f64, m: u32, tol: Tolerance) -> Result<f64> {
    let comb = moment_combination(m)?;
    combination_domain("moment_closed", s, m as f64 + 2.0, &format!("m+2 = {}", m + 2))?;
    comb.evaluate(s, tol)
}

/// `sum_{k>=1} (-1)^(k-1) k^m zeta(s, k)` for `m = 1, 2` and `s > m+1`.
pub fn moment_alt_closed(s: f64, m: u32, tol: Tolerance) -> Result<f64> {
    let comb = moment_alt_combination(m)?;
    combination_domain("moment_alt_closed", s, m as f64 + 1.0, &format!("m+1 = {}", m + 1))?;
    comb.evaluate(s, tol)
}

/// `sum_{k>=1} k^m zeta(s, 2k)` for `m = 1` (`s > 3`) and `m = 2` (`s > 4`).
pub fn even_arg_moment_closed(s: f64, m: u32, tol: Tolerance) -> Result<f64> {
    let comb = even_arg_moment_combination(m)?;
    combination_domain("even_arg_moment_closed", s, m as f64 + 2.0, &format!("m+2 = {}", m + 2))?;
    comb.evaluate(s, tol)
}

/// Both routes to `sum k^m zeta(s, 2k)`: the split
/// `2^(-m-1) (kappa(s;m) - kappa_alt(s;m))` and the direct closed form.
pub fn combination_split(s: f64, m: u32, tol: Tolerance) -> Result<(f64, f64)> {
    moment_alt_combination(m)?;
    combination_domain("combination_split", s, m as f64 + 2.0, &format!("m+2 = {}", m + 2))?;
    let part = Tolerance::new(tol.scaled(0.25), tol.rel_tol).unwrap_or(tol);
    let split = (moment_closed(s, m, part)? - moment_alt_closed(s, m, part)?) * 0.5f64.powi(m as i32 + 1);
    let closed = even_arg_moment_closed(s, m, Tolerance::new(tol.scaled(0.5), tol.rel_tol).unwrap_or(tol))?;
    Ok((split, closed))
}

/// Evaluates a spec through its closed form. `terms_used` counts the zeta
/// values in the combination and `tail_bound` is the tolerance handed to
/// their evaluation.
pub fn eval_closed(spec: &SumSpec) -> Result<SumResult> {
    spec.validate()?;
    let (s, tol) = (spec.s, spec.tol);
    let (value, combination) = match spec.family {
        Family::Kappa => (kappa_closed(s, tol)?, kappa_combination()),
        Family::KappaAlt => (kappa_alt_closed(s, tol)?, kappa_alt_combination()),
        Family::Shifted => (shifted_closed(s, spec.a, tol)?, shifted_combination(spec.a)),
        Family::ShiftedAlt => (shifted_alt_closed(s, spec.a, tol)?, shifted_alt_combination(spec.a)),
        Family::Moment => (moment_closed(s, spec.m, tol)?, moment_combination(spec.m)?),
        Family::MomentAlt => (moment_alt_closed(s, spec.m, tol)?, moment_alt_combination(spec.m)?),
        Family::EvenArgMoment => (
            even_arg_moment_closed(s, spec.m, tol)?,
            even_arg_moment_combination(spec.m)?,
        ),
        Family::GeneralAb | Family::GeneralAbAlt | Family::ExpWeighted => {
            return Err(Error::NoClosedForm {
                what: format!("the {} family", spec.family.slug()),
            })
        }
    };
    Ok(SumResult {
        value,
        terms_used: combination.terms.len().max(1) as u64,
        tail_bound: tol.abs_tol,
        method: Method::ClosedForm,
    })
}
