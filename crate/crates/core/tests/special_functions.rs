// Reference values are quoted to the digits they were computed with.
#![allow(clippy::excessive_precision)]

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

use zetasums::special::{
    bernoulli_numbers, dirichlet_eta, gamma_fn, hurwitz_tail_bound, hurwitz_zeta, lerch_phi, pochhammer, riemann_zeta,
};
use zetasums::{Error, Tolerance};

fn tol(e: f64) -> Tolerance {
    Tolerance::absolute(e).unwrap()
}

fn close(got: f64, want: f64, eps: f64) {
    assert!(
        (got - want).abs() <= eps,
        "got {got}, want {want}, diff {:e}",
        (got - want).abs()
    );
}

#[test]
fn bernoulli_table_examples() {
    let b0 = bernoulli_numbers(0).unwrap();
    assert_eq!(b0.to_strings(), vec!["1"]);
    assert_eq!(bernoulli_numbers(2).unwrap().to_strings(), vec!["1", "-1/2", "1/6"]);
    let b12 = bernoulli_numbers(12).unwrap();
    assert_eq!(b12.to_strings()[12], "-691/2730");
    assert!(bernoulli_numbers(65).is_err());
}

#[test]
fn bernoulli_recurrence_holds_exactly() {
    let b = bernoulli_numbers(64).unwrap();
    for m in 1..=64usize {
        let mut acc = BigRational::zero();
        for j in 0..=m {
            acc += BigRational::from_integer(binomial(BigInt::from(m + 1), BigInt::from(j))) * &b.coeffs()[j];
        }
        assert!(acc.is_zero(), "recurrence fails at m = {m}");
    }
    for c in b.coeffs() {
        assert!(c.denom() > &BigInt::zero());
    }
}

#[test]
fn gamma_examples() {
    close(gamma_fn(1.0).unwrap(), 1.0, 1e-15);
    close(gamma_fn(5.0).unwrap(), 24.0, 24.0 * 1e-14);
    close(gamma_fn(0.5).unwrap(), 1.7724538509055160, 1e-14);
    // mpmath references
    close(gamma_fn(2.5).unwrap(), 1.329340388179137020, 1e-14);
    close(gamma_fn(0.1).unwrap(), 9.513507698668731836, 1e-12);
    let big = gamma_fn(50.5).unwrap();
    assert!((big / 4.290462912351959811e63 - 1.0).abs() < 1e-13);
    assert!(gamma_fn(0.0).is_err());
    assert!(gamma_fn(-1.5).is_err());
}

#[test]
fn pochhammer_examples() {
    assert_eq!(pochhammer(3.7, 0).unwrap(), 1.0);
    assert_eq!(pochhammer(1.0, 5).unwrap(), 120.0);
    assert_eq!(pochhammer(2.0, 3).unwrap(), 24.0);
    assert!(matches!(pochhammer(1e300, 5), Err(Error::Overflow { .. })));
}

#[test]
fn zeta_examples() {
    let t = tol(1e-14);
    close(riemann_zeta(2.0, t).unwrap(), 1.6449340668482264, 1e-14);
    close(riemann_zeta(4.0, t).unwrap(), 1.0823232337111382, 1e-14);
    close(riemann_zeta(3.0, t).unwrap(), 1.2020569031595943, 1e-14);
    close(hurwitz_zeta(3.0, 1.0, t).unwrap(), riemann_zeta(3.0, t).unwrap(), 1e-14);
    close(hurwitz_zeta(2.0, 0.5, t).unwrap(), 4.9348022005446793, 1e-14);
    close(hurwitz_zeta(4.0, 2.75, t).unwrap(), 0.026769354581578227842, 1e-14);
    assert!(matches!(riemann_zeta(1.0, t), Err(Error::Domain { .. })));
    assert!(hurwitz_zeta(2.0, 0.0, t).is_err());
    assert!(hurwitz_zeta(1.0 + 1e-13, 1.0, t).is_err());
}

#[test]
fn eta_examples() {
    let t = tol(1e-14);
    close(dirichlet_eta(2.0, t).unwrap(), 0.8224670334241132, 1e-14);
    close(dirichlet_eta(4.0, t).unwrap(), 0.9470328294972459, 1e-14);
    close(dirichlet_eta(3.0, t).unwrap(), 0.9015426773696957, 1e-14);
    assert!(dirichlet_eta(1.0, t).is_err());
}

#[test]
fn tail_bound_examples() {
    let t = tol(1e-14);
    close(hurwitz_tail_bound(2.0, 10.0).unwrap(), 0.11, 1e-15);
    close(hurwitz_tail_bound(4.0, 1.0).unwrap(), 4.0 / 3.0, 1e-15);
    assert!(hurwitz_tail_bound(3.0, 100.0).unwrap() >= hurwitz_zeta(3.0, 100.0, t).unwrap());
    for s in [1.25, 2.0, 4.0, 8.0] {
        for a in [0.1, 1.0, 10.0, 1000.0] {
            assert!(
                hurwitz_tail_bound(s, a).unwrap() >= hurwitz_zeta(s, a, t).unwrap(),
                "s={s} a={a}"
            );
        }
    }
}

#[test]
fn lerch_examples() {
    let t = tol(1e-14);
    close(
        lerch_phi(1.0, 3.0, 2.0, t).unwrap(),
        hurwitz_zeta(3.0, 2.0, t).unwrap(),
        2e-14,
    );
    let split = 0.25 * (hurwitz_zeta(2.0, 0.5, t).unwrap() - hurwitz_zeta(2.0, 1.0, t).unwrap());
    close(lerch_phi(-1.0, 2.0, 1.0, t).unwrap(), split, 2e-14);
    // mpmath references
    close(
        lerch_phi((-1.0f64).exp(), 2.0, 1.0, t).unwrap(),
        1.111109351605231732,
        1e-13,
    );
    close(lerch_phi(0.9, 2.5, 1.5, t).unwrap(), 0.532600093763898035, 1e-13);
    close(lerch_phi(-0.99, 2.5, 1.5, t).unwrap(), 0.291165329864415411, 1e-13);
    close(lerch_phi(-0.3, 3.0, 0.25, t).unwrap(), 63.85360593899455620, 1e-12);
    assert!(lerch_phi(1.01, 2.0, 1.0, t).is_err());
    assert!(lerch_phi(-1.0, 1.0, 1.0, t).is_err());
}

#[test]
fn hurwitz_decreases_in_alpha() {
    let t = tol(1e-14);
    for s in [1.5, 2.0, 4.0] {
        let values: Vec<f64> = [0.1, 0.5, 1.0, 2.0, 10.0, 100.0]
            .iter()
            .map(|&a| hurwitz_zeta(s, a, t).unwrap())
            .collect();
        assert!(values.windows(2).all(|w| w[0] > w[1]), "s={s}: {values:?}");
    }
}

#[test]
fn tolerance_rejects_tiny_or_invalid() {
    assert!(Tolerance::absolute(1e-17).is_err());
    assert!(Tolerance::absolute(f64::NAN).is_err());
    assert!(Tolerance::new(1e-10, -1.0).is_err());
    assert!(Tolerance::absolute(f64::EPSILON).is_ok());
}

proptest! {
    #[test]
    fn shift_identity(s in 1.2f64..12.0, alpha in 0.05f64..50.0) {
        let t = tol(1e-12);
        let diff = hurwitz_zeta(s, alpha, t).unwrap() - hurwitz_zeta(s, alpha + 1.0, t).unwrap();
        let want = alpha.powf(-s);
        prop_assert!((diff - want).abs() <= 2e-12 + 4.0 * f64::EPSILON * want, "diff {diff} want {want}");
    }

    #[test]
    fn half_argument_split_matches_lerch(s in 1.1f64..8.0, alpha in 0.05f64..20.0) {
        let t = tol(1e-12);
        let split = 2f64.powf(-s)
            * (hurwitz_zeta(s, alpha / 2.0, t).unwrap() - hurwitz_zeta(s, alpha / 2.0 + 0.5, t).unwrap());
        let phi = lerch_phi(-1.0, s, alpha, t).unwrap();
        prop_assert!((split - phi).abs() <= 4e-12 + 8.0 * f64::EPSILON * phi.abs(), "{split} vs {phi}");
    }

    #[test]
    fn tail_bound_dominates(s in 1.01f64..20.0, alpha in 0.01f64..1e4) {
        let z = hurwitz_zeta(s, alpha, tol(1e-14)).unwrap();
        prop_assert!(hurwitz_tail_bound(s, alpha).unwrap() >= z);
    }

    #[test]
    fn lerch_geometric_identity(z in -0.999f64..0.999, s in 1.1f64..6.0, alpha in 0.1f64..10.0) {
        // Phi(z, s, a) = a^-s + z Phi(z, s, a + 1)
        let t = tol(1e-13);
        let lhs = lerch_phi(z, s, alpha, t).unwrap();
        let rhs = alpha.powf(-s) + z * lerch_phi(z, s, alpha + 1.0, t).unwrap();
        prop_assert!((lhs - rhs).abs() <= 3e-13 + 8.0 * f64::EPSILON * lhs.abs(), "{lhs} vs {rhs}");
    }
}
