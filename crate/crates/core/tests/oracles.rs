use num_bigint::BigInt;
use num_rational::BigRational;

use zetasums::special::hurwitz_zeta;
use zetasums::verification::{
    brute_alt_power_sum, brute_power_sum, generating_partial_sums, quad_eta_split, quad_hurwitz, quad_hurwitz_trace,
    QuadratureSpec, MAX_LEVELS,
};
use zetasums::{eulerian_polynomial, faulhaber_coeffs, RationalCoeffs, Tolerance};

fn zeta(s: f64, alpha: f64) -> f64 {
    hurwitz_zeta(s, alpha, Tolerance::absolute(1e-15).unwrap()).unwrap()
}

#[test]
fn quadrature_matches_hurwitz_on_grid() {
    for s in [2.5, 3.0, 4.0, 6.0] {
        for alpha in [0.5, 1.0, 2.0, 10.0] {
            let spec = QuadratureSpec::for_target(s, alpha, 1e-12).unwrap();
            let q = quad_hurwitz(s, alpha, &spec).unwrap();
            assert!((q - zeta(s, alpha)).abs() <= 1e-11, "s={s} alpha={alpha}: {q}");
        }
    }
}

#[test]
fn eta_split_examples() {
    for s in [1.5, 2.0, 3.0] {
        for alpha in [0.4, 1.0, 2.0] {
            let spec = QuadratureSpec::for_target(s, alpha, 1e-11).unwrap();
            let q = quad_eta_split(s, alpha, &spec).unwrap();
            let want = 2f64.powf(-s) * (zeta(s, 0.5 * alpha) - zeta(s, 0.5 * alpha + 0.5));
            assert!((q - want).abs() <= 1e-9, "s={s} alpha={alpha}: {q} vs {want}");
        }
    }
    // alpha = 1 is the Dirichlet eta function.
    let spec = QuadratureSpec::for_target(2.0, 1.0, 1e-11).unwrap();
    assert!((quad_eta_split(2.0, 1.0, &spec).unwrap() - 0.8224670334241132).abs() < 1e-9);
}

#[test]
fn refinement_converges() {
    let spec = QuadratureSpec::for_target(4.0, 1.0, 1e-13).unwrap();
    let trace = quad_hurwitz_trace(4.0, 1.0, &spec).unwrap();
    assert!(trace.len() >= 4 && trace.len() <= MAX_LEVELS as usize + 1);
    let exact = zeta(4.0, 1.0);
    let errors: Vec<f64> = trace.iter().map(|v| (v - exact).abs()).collect();
    // Beyond the first few levels each refinement is no worse than the last.
    for w in errors[2..].windows(2) {
        assert!(w[1] <= w[0].max(1e-13), "{errors:?}");
    }
    assert!(*errors.last().unwrap() < 1e-12);
}

#[test]
fn quadrature_rejects_bad_input() {
    assert!(QuadratureSpec::for_target(3.0, 1.0, 0.0).is_err());
    assert!(QuadratureSpec::for_target(3.0, -1.0, 1e-10).is_err());
    let spec = QuadratureSpec::for_target(3.0, 1.0, 1e-10).unwrap();
    assert!(quad_hurwitz(2.0, 1.0, &spec).is_err());
    assert!(quad_eta_split(1.2, 1.0, &spec).is_err());
    let too_deep = QuadratureSpec {
        levels: MAX_LEVELS + 1,
        ..spec
    };
    assert!(quad_hurwitz(3.0, 1.0, &too_deep).is_err());
}

#[test]
fn generating_function_reproduces_power_sums() {
    for m in 1..=10u32 {
        let p = eulerian_polynomial(m).unwrap();
        let plain = generating_partial_sums(&p, m, 60, false).unwrap();
        let alt = generating_partial_sums(&p, m, 60, true).unwrap();
        assert_eq!(plain.len(), 60);
        for n in 1..=60u64 {
            assert_eq!(plain[n as usize - 1], brute_power_sum(m, n).unwrap(), "m={m} n={n}");
            assert_eq!(alt[n as usize - 1], brute_alt_power_sum(m, n).unwrap(), "m={m} n={n}");
        }
    }
}

#[test]
fn wrong_numerator_is_detected() {
    // Perturbing one Eulerian number changes the partial sums.
    let mut ints = eulerian_polynomial(4).unwrap().numerators();
    ints[1] += 1;
    let wrong = RationalCoeffs::from_integers(ints, 0);
    let sums = generating_partial_sums(&wrong, 4, 10, false).unwrap();
    assert_ne!(sums[9], brute_power_sum(4, 10).unwrap());
}

#[test]
fn brute_sums() {
    assert_eq!(brute_power_sum(2, 10).unwrap(), BigInt::from(385));
    assert_eq!(brute_power_sum(0, 7).unwrap(), BigInt::from(7));
    assert_eq!(brute_alt_power_sum(3, 3).unwrap(), BigInt::from(1 - 8 + 27));
    // Large values stay exact.
    let big = brute_power_sum(12, 10_000).unwrap();
    let poly = faulhaber_coeffs(12).unwrap().eval_integer(&BigInt::from(10_000));
    assert_eq!(BigRational::from_integer(big), poly);
}
