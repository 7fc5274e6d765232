//! Lerch transcendent `Phi(z, s, alpha) = sum_{n>=0} z^n (n+alpha)^-s` on the
//! real segment `-1 <= z <= 1`.
//!
//! Strategy by `z`:
//! * `z = 1` and `z = -1` reduce to Hurwitz zeta values;
//! * `|z| <= e^-1/2` is summed directly with a geometric tail bound;
//! * `e^-1/2 < z < 1` uses Euler–Maclaurin on `e^(-cx) (x+Y)^-s`, whose
//!   integral is an exponential integral;
//! * `-1 < z < -e^-1/2` is split into even and odd indices, giving two sums
//!   with ratio `z^2 <= e^-1`.

use super::expint::scaled_expint;
use super::zeta::{em_weight, half_difference_eps, hurwitz_eps};
use super::{require_above, require_positive, Tolerance, DOMAIN_MARGIN};
use crate::error::{domain, Error, Result};

const DIRECT_RATE: f64 = 0.5;
const MAX_TERMS: u64 = 10_000_000;

/// Lerch transcendent for real `z` with `|z| <= 1`, `alpha > 0`, and `s > 0`
/// (`s > 1` when `|z| = 1`).
pub fn lerch_phi(z: f64, s: f64, alpha: f64, tol: Tolerance) -> Result<f64> {
    lerch_phi_eps(z, s, alpha, tol.abs_tol)
}

pub(crate) fn lerch_phi_eps(z: f64, s: f64, alpha: f64, eps: f64) -> Result<f64> {
    if !z.is_finite() || z.abs() > 1.0 {
        return Err(domain("lerch_phi", "|z| <= 1".to_string(), format!("z = {z}")));
    }
    require_positive("lerch_phi", "alpha", alpha)?;
    let eps = eps.max(f64::MIN_POSITIVE);
    if z.abs() == 1.0 {
        require_above("lerch_phi", "s", s, 1.0, "1 when |z| = 1")?;
    } else {
        require_positive("lerch_phi", "s", s)?;
        if 1.0 - z.abs() < DOMAIN_MARGIN {
            return Err(domain(
                "lerch_phi",
                "|z| = 1 exactly or 1 - |z| >= 1e-12".to_string(),
                format!("z = {z}"),
            ));
        }
    }
    if z == 1.0 {
        hurwitz_eps(s, alpha, eps)
    } else if z == -1.0 {
        let scale = (-s * std::f64::consts::LN_2).exp();
        Ok(scale * half_difference_eps(s, 0.5 * alpha, eps / scale)?)
    } else if z == 0.0 {
        Ok(alpha.powf(-s))
    } else if z > 0.0 {
        let c = -z.ln();
        if c >= DIRECT_RATE {
            direct(z, s, alpha, eps)
        } else {
            euler_maclaurin(c, s, alpha, eps)
        }
    } else if -z.ln() >= DIRECT_RATE {
        direct(z, s, alpha, eps)
    } else {
        // Phi(-r, s, a) = 2^-s [Phi(r^2, s, a/2) - r Phi(r^2, s, (a+1)/2)]
        let r = -z;
        let scale = (-s * std::f64::consts::LN_2).exp();
        let part = 0.5 * eps / scale;
        let even = lerch_phi_eps(r * r, s, 0.5 * alpha, part)?;
        let odd = lerch_phi_eps(r * r, s, 0.5 * (alpha + 1.0), part)?;
        Ok(scale * (even - r * odd))
    }
}

/// Plain summation for `|z| <= e^-1/2`. After `N` terms the remainder is at
/// most `|z|^N (N+alpha)^-s / (1-|z|)`.
fn direct(z: f64, s: f64, alpha: f64, eps: f64) -> Result<f64> {
    let r = z.abs();
    let mut acc = 0.0;
    let mut zn = 1.0;
    for n in 0..MAX_TERMS {
        let term = zn * (n as f64 + alpha).powf(-s);
        if term.abs() / (1.0 - r) <= eps {
            return Ok(acc);
        }
        acc += term;
        zn *= z;
    }
    Err(Error::NoConvergence {
        routine: "lerch direct summation",
    })
}

/// `0 < c < 1/2`, i.e. `z = e^-c` close to 1.
fn euler_maclaurin(c: f64, s: f64, alpha: f64, eps: f64) -> Result<f64> {
    let x_min = 10.0_f64.max(s);
    let mut n = (x_min - alpha).max(0.0).ceil();
    loop {
        let y = n + alpha;
        if let Some(tail) = em_tail(c, s, y, eps * (c * n).exp())? {
            let mut acc = 0.0;
            for k in (0..n as u64).rev() {
                let x = k as f64;
                acc += (-c * x).exp() * (x + alpha).powf(-s);
            }
            return Ok(acc + (-c * n).exp() * tail);
        }
        n += n.max(8.0);
        if n > 1e7 {
            return Err(Error::NoConvergence {
                routine: "lerch Euler-Maclaurin split",
            });
        }
    }
}

/// `sum_{j>=0} e^(-cj) (j+y)^-s` by Euler–Maclaurin from `j = 0`, or `None`
/// when the corrections stall above `eps`.
fn em_tail(c: f64, s: f64, y: f64, eps: f64) -> Result<Option<f64>> {
    let ys = y.powf(-s);
    let integral = y * ys * scaled_expint(s, c * y)?;
    let mut acc = integral + 0.5 * ys;
    // f^(j)(0) = (-1)^j D_j with D_j = sum_l C(j,l) c^(j-l) (s)_l y^(-s-l)
    let mut prev = f64::INFINITY;
    for k in 1..=13 {
        let j = 2 * k - 1;
        let mut d = 0.0;
        let mut binom = 1.0;
        let mut poch = 1.0;
        let mut ypow = ys;
        for l in 0..=j {
            d += binom * c.powi((j - l) as i32) * poch * ypow;
            binom = binom * (j - l) as f64 / (l + 1) as f64;
            poch *= s + l as f64;
            ypow /= y;
        }
        let t = em_weight(k) * d;
        if t.abs() <= eps {
            return Ok(Some(acc));
        }
        if t.abs() > prev {
            return Ok(None);
        }
        acc += t;
        prev = t.abs();
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(z: f64, s: f64, alpha: f64) -> f64 {
        let mut acc = 0.0;
        let mut zn = 1.0;
        for n in 0..2_000_000u64 {
            acc += zn * (n as f64 + alpha).powf(-s);
            zn *= z;
            if zn.abs() < 1e-30 {
                break;
            }
        }
        acc
    }

    #[test]
    fn reduces_to_hurwitz_at_one() {
        let want = hurwitz_eps(3.0, 2.0, 1e-15).unwrap();
        assert!((lerch_phi_eps(1.0, 3.0, 2.0, 1e-15).unwrap() - want).abs() < 1e-15);
    }

    #[test]
    fn minus_one_is_half_argument_split() {
        let h = hurwitz_eps(2.0, 0.5, 1e-16).unwrap() - hurwitz_eps(2.0, 1.0, 1e-16).unwrap();
        let want = 0.25 * h;
        assert!((lerch_phi_eps(-1.0, 2.0, 1.0, 1e-15).unwrap() - want).abs() < 1e-14);
        // Phi(-1, 2, 1) = eta(2)
        assert!((want - std::f64::consts::PI.powi(2) / 12.0).abs() < 1e-14);
    }

    #[test]
    fn geometric_branch_matches_brute_force() {
        for &(z, s, a) in &[(0.3, 2.0, 1.0), (-0.5, 1.5, 0.25), ((-1.0f64).exp(), 2.0, 1.0)] {
            let got = lerch_phi_eps(z, s, a, 1e-15).unwrap();
            let want = brute(z, s, a);
            assert!((got - want).abs() < 1e-13, "z={z}: {got} vs {want}");
        }
    }

    #[test]
    fn near_one_branches_match_brute_force() {
        for &(z, s, a) in &[
            (0.9, 2.0, 1.0),
            (0.99, 0.5, 3.5),
            (0.999, 3.0, 0.2),
            (-0.9, 2.5, 1.0),
            (-0.995, 1.2, 0.7),
        ] {
            let got = lerch_phi_eps(z, s, a, 1e-14).unwrap();
            let want = brute(z, s, a);
            assert!((got - want).abs() < 1e-11, "z={z} s={s} a={a}: {got} vs {want}");
        }
    }

    #[test]
    fn zero_z_is_first_term() {
        assert_eq!(lerch_phi_eps(0.0, 2.0, 4.0, 1e-12).unwrap(), 1.0 / 16.0);
    }

    #[test]
    fn domain_errors() {
        assert!(lerch_phi_eps(1.5, 2.0, 1.0, 1e-12).is_err());
        assert!(lerch_phi_eps(1.0, 1.0, 1.0, 1e-12).is_err());
        assert!(lerch_phi_eps(-1.0, 0.8, 1.0, 1e-12).is_err());
        assert!(lerch_phi_eps(0.5, 0.0, 1.0, 1e-12).is_err());
        assert!(lerch_phi_eps(0.5, 2.0, 0.0, 1e-12).is_err());
    }
}
