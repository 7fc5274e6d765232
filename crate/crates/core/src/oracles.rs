//! Slow, independent reference computations: tanh-sinh quadrature of the
//! integral representations of `zeta(s, alpha)` and of the half-difference
//! `2^-s [zeta(s, alpha/2) - zeta(s, alpha/2 + 1/2)]`, plus exact integer
//! power sums. None of this is used by the production evaluators.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::direct::MAX_MOMENT;
use crate::error::{domain, Error, Result};
use crate::series::CompensatedSum;
use crate::special::{gamma_fn, require_positive, RationalCoeffs};

/// Deepest refinement level; level `l` uses step `2^-l`.
pub const MAX_LEVELS: u32 = 12;
/// Largest `n` accepted by the brute-force power sums.
pub const MAX_BRUTE_N: u64 = 10_000;

// Abscissae beyond |t| = 4.5 have weights below 1e-60 relative to the
// integrand scale.
const T_MAX: f64 = 4.5;

/// Parameters of a quadrature run over `(0, upper_cutoff]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    pub upper_cutoff: f64,
    pub levels: u32,
    pub target_abs: f64,
}

impl QuadratureSpec {
    /// Chooses the cutoff `X` so that the neglected tail of
    /// `x^(s-1) e^(-alpha x) / (1 -+ e^-x) / Gamma(s)` beyond `X` is at most
    /// `target_abs / 10`.
    ///
    /// The tail is at most `alpha^-s Gamma(s, alpha X) / (Gamma(s) (1 - e^-X))`
    /// and `Gamma(s, y) <= 2 y^(s-1) e^-y` once `y >= 2(s-1)`.
    pub fn for_target(s: f64, alpha: f64, target_abs: f64) -> Result<Self> {
        require_positive("QuadratureSpec::for_target", "s", s)?;
        require_positive("QuadratureSpec::for_target", "alpha", alpha)?;
        check_target(target_abs)?;
        let log_target = (0.1 * target_abs).ln();
        let log_gamma = gamma_fn(s)?.ln();
        let mut y = (2.0 * (s - 1.0)).max(1.0);
        loop {
            let x = y / alpha;
            let log_tail = 2f64.ln() + (s - 1.0) * y.ln() - y - s * alpha.ln() - log_gamma - (-(-x).exp_m1()).ln();
            if log_tail <= log_target {
                return Ok(Self {
                    upper_cutoff: x,
                    levels: MAX_LEVELS,
                    target_abs,
                });
            }
            y += 1.0;
        }
    }

    fn check(&self) -> Result<()> {
        require_positive("QuadratureSpec", "upper_cutoff", self.upper_cutoff)?;
        check_target(self.target_abs)?;
        if self.levels > MAX_LEVELS {
            return Err(domain(
                "QuadratureSpec",
                format!("levels <= {MAX_LEVELS}"),
                format!("levels = {}", self.levels),
            ));
        }
        Ok(())
    }
}

fn check_target(target_abs: f64) -> Result<()> {
    if target_abs.is_finite() && target_abs > 0.0 {
        Ok(())
    } else {
        Err(domain(
            "QuadratureSpec",
            "target_abs > 0",
            format!("target_abs = {target_abs}"),
        ))
    }
}

#[derive(Clone, Copy)]
enum Denominator {
    /// `1 - e^-x`
    Minus,
    /// `1 + e^-x`
    Plus,
}

fn integrand(s: f64, alpha: f64, den: Denominator, x: f64) -> f64 {
    let d = match den {
        Denominator::Minus => -(-x).exp_m1(),
        Denominator::Plus => 1.0 + (-x).exp(),
    };
    ((s - 1.0) * x.ln() - alpha * x).exp() / d
}

/// Trapezoid estimates of `int_0^X f` after the substitution
/// `x = X / (1 + e^(-2u))`, `u = (pi/2) sinh t`, one per level.
fn tanh_sinh_levels<F: Fn(f64) -> f64>(f: F, spec: &QuadratureSpec, stop: bool) -> Result<Vec<f64>> {
    spec.check()?;
    let big_x = spec.upper_cutoff;
    let half_pi = std::f64::consts::FRAC_PI_2;
    let node = |t: f64| -> f64 {
        let u = half_pi * t.sinh();
        let e = (-2.0 * u).exp();
        let x = big_x / (1.0 + e);
        if x <= 0.0 || !e.is_finite() {
            return 0.0;
        }
        let dxdt = big_x * 2.0 * e / ((1.0 + e) * (1.0 + e)) * half_pi * t.cosh();
        let w = f(x) * dxdt;
        if w.is_finite() {
            w
        } else {
            0.0
        }
    };
    // Level 0 samples integer t; each later level adds the odd multiples of h.
    let mut sum = CompensatedSum::default();
    let n0 = T_MAX as i64;
    for i in -n0..=n0 {
        sum.add(node(i as f64));
    }
    let mut estimates = vec![sum.value()];
    for level in 1..=spec.levels {
        let h = 0.5f64.powi(level as i32);
        let count = (T_MAX / h) as i64;
        let mut i = -count + if count % 2 == 0 { 1 } else { 0 };
        while i <= count {
            sum.add(node(i as f64 * h));
            i += 2;
        }
        let estimate = h * sum.value();
        let prev = *estimates.last().unwrap();
        estimates.push(estimate);
        if stop && level >= 3 && (estimate - prev).abs() <= 0.1 * spec.target_abs {
            return Ok(estimates);
        }
    }
    if stop {
        return Err(Error::NoConvergence {
            routine: "tanh-sinh quadrature",
        });
    }
    Ok(estimates)
}

fn quad(s: f64, alpha: f64, den: Denominator, spec: &QuadratureSpec) -> Result<f64> {
    let levels = tanh_sinh_levels(|x| integrand(s, alpha, den, x), spec, true)?;
    Ok(levels.last().copied().unwrap_or(f64::NAN) / gamma_fn(s)?)
}

fn check_quad(ctx: &'static str, s: f64, s_min: f64, alpha: f64) -> Result<()> {
    if s.is_nan() || s < s_min {
        return Err(domain(ctx, format!("s >= {s_min}"), format!("s = {s}")));
    }
    require_positive(ctx, "alpha", alpha)
}

/// `zeta(s, alpha) = 1/Gamma(s) int_0^inf x^(s-1) e^(-alpha x) / (1 - e^-x) dx`
/// by quadrature, for `s >= 2.5`.
pub fn quad_hurwitz(s: f64, alpha: f64, spec: &QuadratureSpec) -> Result<f64> {
    check_quad("quad_hurwitz", s, 2.5, alpha)?;
    quad(s, alpha, Denominator::Minus, spec)
}

/// The per-level estimates of `quad_hurwitz`, running all `spec.levels`
/// levels without an early stop.
pub fn quad_hurwitz_trace(s: f64, alpha: f64, spec: &QuadratureSpec) -> Result<Vec<f64>> {
    check_quad("quad_hurwitz_trace", s, 2.5, alpha)?;
    let g = gamma_fn(s)?;
    let raw = tanh_sinh_levels(|x| integrand(s, alpha, Denominator::Minus, x), spec, false)?;
    Ok(raw.into_iter().map(|v| v / g).collect())
}

/// `1/Gamma(s) int_0^inf x^(s-1) e^(-alpha x) / (1 + e^-x) dx` by quadrature,
/// for `s >= 1.5`. It equals `2^-s [zeta(s, alpha/2) - zeta(s, alpha/2 + 1/2)]`.
pub fn quad_eta_split(s: f64, alpha: f64, spec: &QuadratureSpec) -> Result<f64> {
    check_quad("quad_eta_split", s, 1.5, alpha)?;
    quad(s, alpha, Denominator::Plus, spec)
}

fn check_brute(ctx: &'static str, m: u32, n: u64) -> Result<()> {
    if m > MAX_MOMENT {
        return Err(domain(ctx, format!("0 <= m <= {MAX_MOMENT}"), format!("m = {m}")));
    }
    if !(1..=MAX_BRUTE_N).contains(&n) {
        return Err(domain(ctx, format!("1 <= n <= {MAX_BRUTE_N}"), format!("n = {n}")));
    }
    Ok(())
}

/// `sum_{k=1}^n k^m` in exact integer arithmetic.
pub fn brute_power_sum(m: u32, n: u64) -> Result<BigInt> {
    check_brute("brute_power_sum", m, n)?;
    Ok((1..=n).map(|k| num_traits::pow(BigInt::from(k), m as usize)).sum())
}

/// `sum_{k=1}^n (-1)^(k-1) k^m` in exact integer arithmetic.
pub fn brute_alt_power_sum(m: u32, n: u64) -> Result<BigInt> {
    check_brute("brute_alt_power_sum", m, n)?;
    Ok((1..=n)
        .map(|k| {
            let p = num_traits::pow(BigInt::from(k), m as usize);
            if k.is_even() {
                -p
            } else {
                p
            }
        })
        .sum())
}

/// Partial sums `sum_{k=1}^j (+-1)^(k-1) k^m` for `j = 1..=n`, read off the
/// power series of `t P(+-t) / ((1 -+ t)^(m+1) (1 - t))` where `P` is the
/// supplied numerator polynomial (ascending, integral coefficients). With the
/// Eulerian polynomial `P_m` this reproduces the brute-force sums exactly.
pub fn generating_partial_sums(numerator: &RationalCoeffs, m: u32, n: usize, alternating: bool) -> Result<Vec<BigInt>> {
    if numerator.offset() != 0 || numerator.coeffs().iter().any(|c| !c.is_integer()) {
        return Err(domain(
            "generating_partial_sums",
            "integer coefficients from t^0",
            "a non-integral numerator",
        ));
    }
    // Series of t P(+-t), truncated at degree n.
    let mut series = vec![BigInt::zero(); n + 1];
    for (i, c) in numerator.numerators().into_iter().enumerate() {
        if i + 1 > n {
            break;
        }
        series[i + 1] = if alternating && i % 2 == 1 { -c } else { c };
    }
    // Divide by (1 -+ t) a total of m+1 times, then by (1 - t) once.
    let step = if alternating { -BigInt::one() } else { BigInt::one() };
    let divide = |series: &mut Vec<BigInt>, r: &BigInt| {
        for j in 1..series.len() {
            let prev = series[j - 1].clone();
            series[j] += r * prev;
        }
    };
    for _ in 0..=m {
        divide(&mut series, &step);
    }
    divide(&mut series, &BigInt::one());
    Ok(series.into_iter().skip(1).collect())
}
