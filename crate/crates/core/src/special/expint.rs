//! Generalized exponential integral `E_s(w) = int_1^inf e^(-wt) t^-s dt`,
//! returned scaled as `e^w E_s(w)` so that large `w` does not underflow.

use std::sync::OnceLock;

use super::gamma::gamma_unchecked;
use super::zeta::hurwitz_precise;
use crate::error::{Error, Result};

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
const MAX_ITER: usize = 500;

/// `e^w E_s(w)` for `s > 0` and `w > 0`.
pub(crate) fn scaled_expint(s: f64, w: f64) -> Result<f64> {
    if w > 1.0 {
        continued_fraction(s, w)
    } else {
        small_argument(s, w)
    }
}

// Modified Lentz evaluation of
// E_s(w) = e^-w (1/(w+s-) 1*s/(w+s+2-) 2(s+1)/(w+s+4-) ...).
fn continued_fraction(s: f64, w: f64) -> Result<f64> {
    const TINY: f64 = 1e-300;
    let mut b = w + s;
    let mut c = 1.0 / TINY;
    let mut d = 1.0 / b;
    let mut h = d;
    for i in 1..MAX_ITER {
        let fi = i as f64;
        let an = -fi * (s - 1.0 + fi);
        b += 2.0;
        d = 1.0 / (an * d + b);
        c = b + an / c;
        let delta = c * d;
        h *= delta;
        if (delta - 1.0).abs() <= f64::EPSILON {
            return Ok(h);
        }
    }
    Err(Error::NoConvergence {
        routine: "exponential integral continued fraction",
    })
}

fn small_argument(s: f64, w: f64) -> Result<f64> {
    // base order in (0, 1.5), then climb with E_{t+1} = (e^-w - w E_t) / t
    let steps = if s < 0.5 { 0.0 } else { (s - 0.5).floor() };
    let mut t = s - steps;
    let mut e = w.powf(t - 1.0) * upper_gamma_small(1.0 - t, w)?;
    let ew = (-w).exp();
    for _ in 0..steps as u64 {
        e = (ew - w * e) / t;
        t += 1.0;
    }
    Ok(e * w.exp())
}

/// `Gamma(a, w)` for `-0.5 < a < 1` and `0 < w <= 1`.
fn upper_gamma_small(a: f64, w: f64) -> Result<f64> {
    let lnw = w.ln();
    let head = if a == 0.0 { lnw } else { (a * lnw).exp_m1() / a };
    // sum_{k>=1} (-1)^k w^(a+k) / (k! (a+k))
    let wa = (a * lnw).exp();
    let mut term = 1.0;
    let mut series = 0.0;
    for k in 1..MAX_ITER {
        let fk = k as f64;
        term *= -w / fk;
        let piece = term / (a + fk);
        series += piece;
        if piece.abs() <= f64::EPSILON * series.abs() {
            return Ok(gam1(a) - head - wa * series);
        }
    }
    Err(Error::NoConvergence {
        routine: "incomplete gamma series",
    })
}

/// `(Gamma(1+a) - 1) / a`, continuous through `a = 0`.
fn gam1(a: f64) -> f64 {
    if a.abs() >= 0.2 {
        return (gamma_unchecked(1.0 + a) - 1.0) / a;
    }
    // ln Gamma(1+a) = -gamma a + sum_{k>=2} (-1)^k zeta(k) a^k / k
    let z = zeta_integers();
    let mut lg = -EULER_GAMMA * a;
    let mut pow = -a;
    for (k, zk) in z.iter().enumerate().skip(2) {
        pow *= -a;
        lg += zk * pow / k as f64;
        if pow.abs() < 1e-18 {
            break;
        }
    }
    // (e^lg - 1)/a with lg = O(a)
    if a == 0.0 {
        -EULER_GAMMA
    } else {
        lg.exp_m1() / a
    }
}

fn zeta_integers() -> &'static [f64; 32] {
    static Z: OnceLock<[f64; 32]> = OnceLock::new();
    Z.get_or_init(|| {
        let mut z = [0.0; 32];
        for (k, slot) in z.iter_mut().enumerate().skip(2) {
            *slot = hurwitz_precise(k as f64, 1.0).expect("zeta at integers >= 2");
        }
        z
    })
}
