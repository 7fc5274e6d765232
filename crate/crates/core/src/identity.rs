//! Catalog of checkable identities: each pairs a directly summed left-hand
//! side with a closed-form or transformed right-hand side.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::closed::{
    even_arg_moment_closed, kappa_alt_closed, kappa_closed, moment_alt_closed, moment_closed, shifted_alt_closed,
    shifted_closed,
};
use crate::direct::{eval_direct_with, EvalOptions, Family, Sign, SumSpec};
use crate::error::{Error, Result};
use crate::special::Tolerance;
use crate::transforms::{corollary_b_equals_a, eval_transformed};

/// Allowance for rounding in the final sums, in units of `eps (|lhs| + |rhs|)`.
const ROUNDING_ULPS: f64 = 64.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Identity {
    /// `sum_{k>=1} zeta(s, k) = zeta(s-1)`
    KappaSum,
    /// `sum_{k>=1} (-1)^(k-1) zeta(s, k) = (1 - 2^-s) zeta(s)`
    KappaAltSum,
    /// `sum_{k>=0} zeta(s, k+a) = zeta(s-1, a) + (1-a) zeta(s, a)`
    ShiftedSum,
    /// `sum_{k>=0} (-1)^k zeta(s, k+a) = 2^-s zeta(s, a/2)`
    ShiftedAltSum,
    FirstMoment,
    SecondMoment,
    ThirdMoment,
    AltFirstMoment,
    AltSecondMoment,
    EvenArgFirstMoment,
    EvenArgSecondMoment,
    /// `sum_k zeta(s, ka+b)` against its inverted series.
    InvertedPlain,
    /// `sum_k (-1)^k zeta(s, ka+b)` against its inverted series.
    InvertedAlternating,
    /// `sum_k (+-1)^k e^(-ck) zeta(s, ka+b)` against its Lerch series.
    InvertedWeighted,
    /// The inverted series with `b = a`.
    EqualShift,
}

impl Identity {
    pub const ALL: [Identity; 15] = [
        Identity::KappaSum,
        Identity::KappaAltSum,
        Identity::ShiftedSum,
        Identity::ShiftedAltSum,
        Identity::FirstMoment,
        Identity::SecondMoment,
        Identity::ThirdMoment,
        Identity::AltFirstMoment,
        Identity::AltSecondMoment,
        Identity::EvenArgFirstMoment,
        Identity::EvenArgSecondMoment,
        Identity::InvertedPlain,
        Identity::InvertedAlternating,
        Identity::InvertedWeighted,
        Identity::EqualShift,
    ];

    /// Catalog key used on the command line.
    pub fn key(self) -> &'static str {
        match self {
            Identity::KappaSum => "2.1",
            Identity::KappaAltSum => "2.2",
            Identity::ShiftedSum => "2.3",
            Identity::ShiftedAltSum => "2.4",
            Identity::FirstMoment => "3.1",
            Identity::SecondMoment => "3.2",
            Identity::ThirdMoment => "3.3",
            Identity::AltFirstMoment => "3.7",
            Identity::AltSecondMoment => "3.8",
            Identity::EvenArgFirstMoment => "even-m1",
            Identity::EvenArgSecondMoment => "even-m2",
            Identity::InvertedPlain => "4.2",
            Identity::InvertedAlternating => "4.3",
            Identity::InvertedWeighted => "4.4",
            Identity::EqualShift => "corollary",
        }
    }

    fn family(self) -> Family {
        match self {
            Identity::KappaSum => Family::Kappa,
            Identity::KappaAltSum => Family::KappaAlt,
            Identity::ShiftedSum => Family::Shifted,
            Identity::ShiftedAltSum => Family::ShiftedAlt,
            Identity::FirstMoment | Identity::SecondMoment | Identity::ThirdMoment => Family::Moment,
            Identity::AltFirstMoment | Identity::AltSecondMoment => Family::MomentAlt,
            Identity::EvenArgFirstMoment | Identity::EvenArgSecondMoment => Family::EvenArgMoment,
            Identity::InvertedPlain => Family::GeneralAb,
            Identity::InvertedAlternating => Family::GeneralAbAlt,
            Identity::InvertedWeighted => Family::ExpWeighted,
            Identity::EqualShift => Family::GeneralAb,
        }
    }

    fn moment(self) -> u32 {
        match self {
            Identity::FirstMoment | Identity::AltFirstMoment | Identity::EvenArgFirstMoment => 1,
            Identity::SecondMoment | Identity::AltSecondMoment | Identity::EvenArgSecondMoment => 2,
            Identity::ThirdMoment => 3,
            _ => 0,
        }
    }

    /// Which of `a`, `b`, `c`, `sign` the identity reads.
    pub fn uses(self) -> (bool, bool, bool, bool) {
        match self {
            Identity::ShiftedSum | Identity::ShiftedAltSum => (true, false, false, false),
            Identity::InvertedPlain | Identity::InvertedAlternating => (true, true, false, false),
            Identity::InvertedWeighted => (true, true, true, true),
            Identity::EqualShift => (true, false, false, true),
            _ => (false, false, false, false),
        }
    }

    /// The left-hand side as a direct-summation spec.
    pub fn lhs_spec(self, point: &IdentityPoint, tol: Tolerance) -> SumSpec {
        let mut spec = SumSpec::new(self.family(), point.s)
            .with_m(self.moment())
            .with_a(point.a)
            .with_b(point.b)
            .with_c(point.c)
            .with_sign(point.sign)
            .with_tol(tol);
        if self == Identity::EqualShift {
            let family = if point.sign.is_minus() {
                Family::GeneralAbAlt
            } else {
                Family::GeneralAb
            };
            spec = SumSpec::new(family, point.s)
                .with_a(point.a)
                .with_b(point.a)
                .with_tol(tol);
        }
        spec
    }

    /// Points swept by `identity-check all --grid default`.
    pub fn default_grid(self) -> Vec<IdentityPoint> {
        let s_only = |ss: &[f64]| ss.iter().map(|&s| IdentityPoint::at(s)).collect::<Vec<_>>();
        let with_a = |ss: &[f64], aa: &[f64]| {
            let mut out = Vec::new();
            for &s in ss {
                for &a in aa {
                    out.push(IdentityPoint::at(s).with_a(a));
                }
            }
            out
        };
        let with_ab = |ss: &[f64], aa: &[f64], bb: &[f64]| {
            let mut out = Vec::new();
            for &s in ss {
                for &a in aa {
                    for &b in bb {
                        out.push(IdentityPoint::at(s).with_a(a).with_b(b));
                    }
                }
            }
            out
        };
        const SHIFTS: [f64; 4] = [0.25, 1.0, 2.5, 9.75];
        match self {
            Identity::KappaSum => s_only(&[2.5, 3.0, 4.0, 6.0, 10.0]),
            Identity::KappaAltSum => s_only(&[1.5, 2.0, 3.0, 7.0]),
            Identity::ShiftedSum => with_a(&[2.5, 3.0, 4.0, 6.0, 10.0], &SHIFTS),
            Identity::ShiftedAltSum => with_a(&[1.5, 2.0, 3.0, 7.0], &SHIFTS),
            Identity::FirstMoment => s_only(&[3.5, 5.0]),
            Identity::SecondMoment => s_only(&[4.5, 6.0]),
            Identity::ThirdMoment => s_only(&[5.5, 7.0]),
            Identity::AltFirstMoment | Identity::AltSecondMoment => s_only(&[3.5, 5.0]),
            Identity::EvenArgFirstMoment => s_only(&[4.0, 5.0]),
            Identity::EvenArgSecondMoment => s_only(&[5.0, 6.0]),
            Identity::InvertedPlain => with_ab(&[2.5, 4.0, 6.0], &[0.05, 0.1, 0.5, 1.0, 2.0], &[0.3, 1.0, 2.7]),
            Identity::InvertedAlternating => {
                with_ab(&[1.5, 2.5, 4.0, 6.0], &[0.05, 0.1, 0.5, 1.0, 2.0], &[0.3, 1.0, 2.7])
            }
            Identity::InvertedWeighted => {
                let mut out = vec![
                    IdentityPoint::at(3.0).with_a(0.5).with_b(1.0).with_c(0.7),
                    IdentityPoint::at(2.0)
                        .with_a(0.25)
                        .with_b(0.5)
                        .with_c(1.2)
                        .with_sign(Sign::Minus),
                ];
                for sign in [Sign::Plus, Sign::Minus] {
                    for c in [0.0, 0.1, 0.5, 2.0] {
                        for a in [0.1, 1.0] {
                            out.push(IdentityPoint::at(3.0).with_a(a).with_b(0.7).with_c(c).with_sign(sign));
                        }
                    }
                }
                out
            }
            Identity::EqualShift => {
                let mut out = Vec::new();
                for sign in [Sign::Plus, Sign::Minus] {
                    let ss: &[f64] = if sign.is_minus() { &[1.5, 2.5, 4.0] } else { &[2.5, 4.0] };
                    for &s in ss {
                        for a in [0.1, 0.5, 2.0] {
                            out.push(IdentityPoint::at(s).with_a(a).with_sign(sign));
                        }
                    }
                }
                out
            }
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

impl FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase();
        let alias = match key.as_str() {
            "kappa3" => "3.3",
            "alt-m1" => "3.7",
            "alt-m2" => "3.8",
            other => other,
        };
        Identity::ALL
            .into_iter()
            .find(|id| id.key() == alias)
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

/// Parameter values for one identity check. Parameters an identity does not
/// read are ignored.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IdentityPoint {
    pub s: f64,
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub sign: Sign,
}

impl IdentityPoint {
    pub fn at(s: f64) -> Self {
        Self {
            s,
            a: 1.0,
            b: 1.0,
            c: 0.0,
            sign: Sign::Plus,
        }
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
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub identity: String,
    pub s: f64,
    pub a: Option<f64>,
    pub b: Option<f64>,
    pub c: Option<f64>,
    pub sign: Option<Sign>,
    pub lhs: f64,
    pub rhs: f64,
    pub abs_diff: f64,
    pub rel_diff: f64,
    /// Sum of both sides' error allowances plus a rounding allowance.
    pub budget: f64,
    pub pass: bool,
    pub lhs_terms: u64,
    /// `None` for closed-form right-hand sides.
    pub rhs_terms: Option<u64>,
}

/// Evaluates both sides of `identity` at `point`, each to `tol`, and reports
/// whether they agree within the combined budget.
pub fn check_identity(
    identity: Identity,
    point: &IdentityPoint,
    tol: Tolerance,
    opts: &EvalOptions,
) -> Result<IdentityReport> {
    let spec = identity.lhs_spec(point, tol);
    let lhs = eval_direct_with(&spec, opts)?;
    let s = point.s;
    let (rhs, rhs_terms) = match identity {
        Identity::KappaSum => (kappa_closed(s, tol)?, None),
        Identity::KappaAltSum => (kappa_alt_closed(s, tol)?, None),
        Identity::ShiftedSum => (shifted_closed(s, point.a, tol)?, None),
        Identity::ShiftedAltSum => (shifted_alt_closed(s, point.a, tol)?, None),
        Identity::FirstMoment | Identity::SecondMoment | Identity::ThirdMoment => {
            (moment_closed(s, identity.moment(), tol)?, None)
        }
        Identity::AltFirstMoment | Identity::AltSecondMoment => (moment_alt_closed(s, identity.moment(), tol)?, None),
        Identity::EvenArgFirstMoment | Identity::EvenArgSecondMoment => {
            (even_arg_moment_closed(s, identity.moment(), tol)?, None)
        }
        Identity::InvertedPlain | Identity::InvertedAlternating | Identity::InvertedWeighted => {
            let r = eval_transformed(&spec, opts)?;
            (r.value, Some(r.terms_used))
        }
        Identity::EqualShift => {
            let r = corollary_b_equals_a(s, point.a, point.sign, tol)?;
            (r.value, Some(r.terms_used))
        }
    };
    let abs_diff = (lhs.value - rhs).abs();
    let scale = lhs.value.abs().max(rhs.abs());
    let rel_diff = if scale > 0.0 { abs_diff / scale } else { 0.0 };
    let budget = 2.0 * tol.abs_tol + ROUNDING_ULPS * f64::EPSILON * (lhs.value.abs() + rhs.abs());
    let (uses_a, uses_b, uses_c, uses_sign) = identity.uses();
    Ok(IdentityReport {
        identity: identity.key().to_string(),
        s,
        a: uses_a.then_some(point.a),
        b: uses_b.then_some(point.b),
        c: uses_c.then_some(point.c),
        sign: uses_sign.then_some(point.sign),
        lhs: lhs.value,
        rhs,
        abs_diff,
        rel_diff,
        budget,
        pass: abs_diff <= budget,
        lhs_terms: lhs.terms_used,
        rhs_terms,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keys_round_trip() {
        for id in Identity::ALL {
            assert_eq!(id.key().parse::<Identity>().unwrap(), id);
        }
        assert_eq!("kappa3".parse::<Identity>().unwrap(), Identity::ThirdMoment);
        assert_eq!("ALT-M2".parse::<Identity>().unwrap(), Identity::AltSecondMoment);
        assert!(matches!("9.9".parse::<Identity>(), Err(Error::UnknownIdentity(_))));
    }

    #[test]
    fn kappa_sum_at_four() {
        let tol = Tolerance::absolute(1e-10).unwrap();
        let r = check_identity(
            Identity::KappaSum,
            &IdentityPoint::at(4.0),
            tol,
            &EvalOptions::default(),
        )
        .unwrap();
        assert!(r.pass && r.abs_diff <= 1e-10, "{r:?}");
    }
}
