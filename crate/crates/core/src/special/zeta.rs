//! Hurwitz and Riemann zeta functions by Euler–Maclaurin summation.
//!
//! For `f(x) = (x + alpha)^-s` every derivative has constant sign, so after
//! the correction terms `T_1..T_{k-1}` the remainder is bounded by `|T_k|`.
//! The split point `N` is raised until some `|T_k|` with `k <= 13` falls
//! below the requested absolute tolerance; corrections up to `B_24` are
//! included in the sum.

use std::sync::OnceLock;

use super::bernoulli::bernoulli_f64;
use super::{require_above, require_positive, Tolerance};
use crate::error::{Error, Result};

const MAX_CORRECTIONS: usize = 13;
const MAX_SPLIT: f64 = 1e7;

/// `B_{2k} / (2k)!` for `k = 0..=MAX_CORRECTIONS`.
fn em_weights() -> &'static [f64; MAX_CORRECTIONS + 1] {
    static W: OnceLock<[f64; MAX_CORRECTIONS + 1]> = OnceLock::new();
    W.get_or_init(|| {
        let mut w = [0.0; MAX_CORRECTIONS + 1];
        let mut fact = 1.0_f64;
        for (k, slot) in w.iter_mut().enumerate() {
            if k > 0 {
                fact *= (2 * k - 1) as f64 * (2 * k) as f64;
            }
            *slot = bernoulli_f64(2 * k) / fact;
        }
        w
    })
}

pub(crate) fn em_weight(k: usize) -> f64 {
    em_weights()[k]
}

/// Sums `B_{2k}/(2k)! (s)_{2k-1} power(s+2k-1)` for `k >= 1` until a term drops
/// below `eps`. Returns the partial sum and the first omitted term, or `None`
/// when the asymptotic series stalls before reaching `eps`.
fn em_corrections(s: f64, eps: f64, power: impl Fn(f64) -> f64) -> Option<(f64, f64)> {
    let mut poch = s;
    let mut sum = 0.0;
    let mut prev = f64::INFINITY;
    for k in 1..=MAX_CORRECTIONS {
        let order = (2 * k - 1) as f64;
        let t = em_weight(k) * poch * power(s + order);
        let mag = t.abs();
        if mag <= eps {
            return Some((sum, mag));
        }
        if k == MAX_CORRECTIONS || mag > prev {
            return None;
        }
        sum += t;
        prev = mag;
        poch *= (s + order) * (s + order + 1.0);
    }
    None
}

fn initial_split(s: f64, alpha: f64) -> f64 {
    let x_min = 10.0_f64.max(s);
    (x_min - alpha).max(0.0).ceil()
}

fn next_split(n: f64) -> Result<f64> {
    let next = n + n.max(8.0);
    if next > MAX_SPLIT {
        Err(Error::NoConvergence {
            routine: "Euler-Maclaurin split",
        })
    } else {
        Ok(next)
    }
}

/// `sum_{n>=0} (n+alpha)^-s` for `s > 1`, truncation error at most `eps`.
pub(crate) fn hurwitz_eps(s: f64, alpha: f64, eps: f64) -> Result<f64> {
    require_above("hurwitz_zeta", "s", s, 1.0, "1")?;
    require_positive("hurwitz_zeta", "alpha", alpha)?;
    Ok(hurwitz_em(s, alpha, eps.max(f64::MIN_POSITIVE))?.0)
}

/// Returns the value and the certified remainder bound.
pub(crate) fn hurwitz_em(s: f64, alpha: f64, eps: f64) -> Result<(f64, f64)> {
    let mut n = initial_split(s, alpha);
    loop {
        let x = n + alpha;
        let inv_x = 1.0 / x;
        let x_pow = x.powf(-s);
        // the leading tail pieces are ~x^(1-s); leave them the full budget
        if let Some((corr, bound)) = em_corrections(s, eps, |e| x_pow * inv_x.powf(e - s)) {
            let mut acc = x_pow * x / (s - 1.0) + 0.5 * x_pow + corr;
            for k in (0..n as u64).rev() {
                acc += (k as f64 + alpha).powf(-s);
            }
            return Ok((acc, bound));
        }
        n = next_split(n)?;
    }
}

/// Evaluation accurate to about one part in 2^56 of the value.
pub(crate) fn hurwitz_precise(s: f64, alpha: f64) -> Result<f64> {
    let scale = alpha.powf(-s) + alpha.powf(1.0 - s) / (s - 1.0);
    hurwitz_eps(s, alpha, scale * 2f64.powi(-56))
}

/// Hurwitz zeta function `zeta(s, alpha) = sum_{n>=0} (n+alpha)^-s` for real
/// `s > 1` and `alpha > 0`.
pub fn hurwitz_zeta(s: f64, alpha: f64, tol: Tolerance) -> Result<f64> {
    hurwitz_eps(s, alpha, tol.abs_tol)
}

/// Riemann zeta function for `s > 1`.
pub fn riemann_zeta(s: f64, tol: Tolerance) -> Result<f64> {
    require_above("riemann_zeta", "s", s, 1.0, "1")?;
    hurwitz_eps(s, 1.0, tol.abs_tol)
}

/// Dirichlet eta function `(1 - 2^(1-s)) zeta(s)`, restricted to `s > 1`.
pub fn dirichlet_eta(s: f64, tol: Tolerance) -> Result<f64> {
    require_above("dirichlet_eta", "s", s, 1.0, "1")?;
    let factor = -(-(s - 1.0) * std::f64::consts::LN_2).exp_m1();
    Ok(factor * hurwitz_eps(s, 1.0, tol.abs_tol)?)
}

/// Certified upper bound `alpha^-s + alpha^(1-s)/(s-1) >= zeta(s, alpha)`.
pub fn hurwitz_tail_bound(s: f64, alpha: f64) -> Result<f64> {
    require_above("hurwitz_tail_bound", "s", s, 1.0, "1")?;
    require_positive("hurwitz_tail_bound", "alpha", alpha)?;
    Ok(alpha.powf(-s) + alpha.powf(1.0 - s) / (s - 1.0))
}

/// `(1 - e^-u) / u`, equal to 1 at `u = 0`.
fn one_minus_exp_over(u: f64) -> f64 {
    if u.abs() < 1e-300 {
        1.0
    } else {
        -(-u).exp_m1() / u
    }
}

/// `sum_{n>=0} [(n+y)^-sigma - (n+y+1/2)^-sigma]` for `sigma > 0`, i.e.
/// `zeta(sigma, y) - zeta(sigma, y + 1/2)` continued to `0 < sigma <= 1`.
pub(crate) fn half_difference_eps(sigma: f64, y: f64, eps: f64) -> Result<f64> {
    require_positive("half_difference", "sigma", sigma)?;
    require_positive("half_difference", "y", y)?;
    let eps = eps.max(f64::MIN_POSITIVE);
    let mut n = initial_split(sigma, y);
    loop {
        let a = n + y;
        let b = a + 0.5;
        let (ia, ib) = (1.0 / a, 1.0 / b);
        let (pa, pb) = (a.powf(-sigma), b.powf(-sigma));
        let diff = |e: f64| pa * ia.powf(e - sigma) - pb * ib.powf(e - sigma);
        if let Some((corr, _)) = em_corrections(sigma, eps, diff) {
            let l = (0.5 * ia).ln_1p();
            let integral = a * pa * l * one_minus_exp_over((sigma - 1.0) * l);
            let mut acc = integral + 0.5 * (pa - pb) + corr;
            for k in (0..n as u64).rev() {
                let x = k as f64 + y;
                acc += x.powf(-sigma) - (x + 0.5).powf(-sigma);
            }
            return Ok(acc);
        }
        n = next_split(n)?;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn tol(e: f64) -> Tolerance {
        Tolerance::absolute(e).unwrap()
    }

    #[test]
    fn classical_values() {
        assert!((riemann_zeta(2.0, tol(1e-15)).unwrap() - PI * PI / 6.0).abs() < 4e-16);
        assert!((riemann_zeta(4.0, tol(1e-15)).unwrap() - 1.0823232337111382).abs() < 1e-15);
        assert!((riemann_zeta(3.0, tol(1e-15)).unwrap() - 1.2020569031595943).abs() < 1e-15);
        assert!((hurwitz_zeta(2.0, 0.5, tol(1e-15)).unwrap() - PI * PI / 2.0).abs() < 2e-15);
    }

    #[test]
    fn eta_values() {
        assert!((dirichlet_eta(2.0, tol(1e-15)).unwrap() - 0.8224670334241132).abs() < 1e-15);
        assert!((dirichlet_eta(4.0, tol(1e-15)).unwrap() - 0.9470328294972459).abs() < 1e-15);
        assert!((dirichlet_eta(3.0, tol(1e-15)).unwrap() - 0.9015426773696957).abs() < 1e-15);
        assert!(dirichlet_eta(1.0, tol(1e-15)).is_err());
    }

    #[test]
    fn domain_errors() {
        assert!(hurwitz_zeta(1.0, 1.0, tol(1e-12)).is_err());
        assert!(hurwitz_zeta(1.0 + 1e-13, 1.0, tol(1e-12)).is_err());
        assert!(hurwitz_zeta(2.0, 0.0, tol(1e-12)).is_err());
        assert!(hurwitz_zeta(2.0, -0.5, tol(1e-12)).is_err());
        assert!(hurwitz_tail_bound(0.5, 1.0).is_err());
    }

    #[test]
    fn tail_bound_examples() {
        assert!((hurwitz_tail_bound(2.0, 10.0).unwrap() - 0.11).abs() < 1e-15);
        assert!((hurwitz_tail_bound(4.0, 1.0).unwrap() - 4.0 / 3.0).abs() < 1e-15);
        assert!((hurwitz_tail_bound(3.0, 100.0).unwrap() - 5.1e-5).abs() < 1e-18);
    }

    #[test]
    fn half_difference_matches_hurwitz_for_s_above_one() {
        for &(s, y) in &[(2.0, 0.5), (3.5, 2.0), (1.5, 7.25), (6.0, 0.1)] {
            let d = half_difference_eps(s, y, 1e-15).unwrap();
            let h = hurwitz_eps(s, y, 1e-16).unwrap() - hurwitz_eps(s, y + 0.5, 1e-16).unwrap();
            assert!((d - h).abs() < 1e-13 * h.abs().max(1.0), "s={s} y={y}: {d} vs {h}");
        }
    }

    #[test]
    fn half_difference_at_sigma_one_is_digamma_gap() {
        // psi(1) - psi(1/2) = 2 ln 2
        let d = half_difference_eps(1.0, 0.5, 1e-15).unwrap();
        assert!((d - 2.0 * std::f64::consts::LN_2).abs() < 1e-14);
    }
}
