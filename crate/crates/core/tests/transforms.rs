// Reference values are quoted to the digits they were computed with.
#![allow(clippy::excessive_precision)]

use proptest::prelude::*;

use zetasums::{
    choose_method, compare_sides, corollary_b_equals_a, eval_auto, eval_direct, eval_transformed,
    kappa_ab_alt_transformed, kappa_ab_transformed, s_pm_transformed, term_count_estimate, Error, EvalOptions, Family,
    Method, Side, Sign, SumSpec, Tolerance,
};

fn tol(e: f64) -> Tolerance {
    Tolerance::absolute(e).unwrap()
}

fn within(lhs: f64, rhs: f64, budget: f64) -> bool {
    (lhs - rhs).abs() <= budget + 64.0 * f64::EPSILON * (lhs.abs() + rhs.abs())
}

#[test]
fn inversion_holds_on_grid() {
    let t = tol(1e-10);
    for s in [2.5, 4.0, 6.0] {
        for a in [0.05, 0.1, 0.5, 1.0, 2.0] {
            for b in [0.3, 1.0, 2.7] {
                let spec = SumSpec::new(Family::GeneralAb, s).with_a(a).with_b(b).with_tol(t);
                let lhs = eval_direct(&spec).unwrap().value;
                let rhs = kappa_ab_transformed(s, a, b, t).unwrap().value;
                assert!(within(lhs, rhs, 2e-10), "plain s={s} a={a} b={b}: {lhs} vs {rhs}");
                let spec = SumSpec::new(Family::GeneralAbAlt, s).with_a(a).with_b(b).with_tol(t);
                let lhs = eval_direct(&spec).unwrap().value;
                let rhs = kappa_ab_alt_transformed(s, a, b, t).unwrap().value;
                assert!(within(lhs, rhs, 2e-10), "alternating s={s} a={a} b={b}: {lhs} vs {rhs}");
            }
        }
    }
}

#[test]
fn weighted_inversion_on_grid() {
    let t = tol(1e-10);
    for s in [1.5, 3.0, 5.0] {
        for a in [0.1, 0.5, 2.0] {
            for c in [0.05, 0.7, 3.0] {
                for sign in [Sign::Plus, Sign::Minus] {
                    let spec = SumSpec::new(Family::ExpWeighted, s)
                        .with_a(a)
                        .with_b(0.8)
                        .with_c(c)
                        .with_sign(sign)
                        .with_tol(t);
                    let lhs = eval_direct(&spec).unwrap().value;
                    let rhs = s_pm_transformed(s, a, 0.8, c, sign, t).unwrap().value;
                    assert!(within(lhs, rhs, 2e-10), "{sign:?} s={s} a={a} c={c}: {lhs} vs {rhs}");
                }
            }
        }
    }
}

#[test]
fn reference_values() {
    let t = tol(1e-11);
    assert!((kappa_ab_transformed(4.0, 0.01, 1.0, t).unwrap().value - 40.61318131332323880).abs() < 1e-10);
    assert!((kappa_ab_transformed(4.0, 0.1, 1.0, t).unwrap().value - 4.582416339267800648).abs() < 1e-10);
    let plus = s_pm_transformed(3.0, 0.5, 1.0, 0.7, Sign::Plus, t).unwrap().value;
    assert!((plus - 1.479431307362649424).abs() < 1e-10);
    let minus = s_pm_transformed(2.0, 0.25, 0.5, 1.2, Sign::Minus, t).unwrap().value;
    assert!((minus - 4.291893855487606565).abs() < 1e-10);
}

#[test]
fn inversion_is_an_involution() {
    // Transforming with a and then reading the transformed series as a sum
    // with parameter 1/a recovers the original: both equal the direct value.
    let t = tol(1e-11);
    for (a, b) in [(0.5, 1.0), (2.0, 1.0), (0.5, 0.5), (2.0, 2.0)] {
        let s = 4.0;
        let forward = kappa_ab_transformed(s, a, b, t).unwrap().value;
        let inverse_params = (1.0 / a, b / a);
        let back = a.powf(-s)
            * kappa_ab_transformed(s, inverse_params.0, inverse_params.1, t)
                .unwrap()
                .value;
        let scaled_direct = eval_direct(&SumSpec::new(Family::GeneralAb, s).with_a(a).with_b(b).with_tol(t))
            .unwrap()
            .value;
        assert!(within(forward, scaled_direct, 3e-11), "a={a} b={b}");
        assert!(
            within(back, scaled_direct, 3e-11),
            "a={a} b={b}: {back} vs {scaled_direct}"
        );
    }
}

#[test]
fn weight_is_continuous_at_zero() {
    let t = tol(1e-11);
    for sign in [Sign::Plus, Sign::Minus] {
        let at_zero = s_pm_transformed(3.0, 0.4, 0.9, 0.0, sign, t).unwrap().value;
        let near_zero = s_pm_transformed(3.0, 0.4, 0.9, 1e-6, sign, t).unwrap().value;
        assert!(
            (at_zero - near_zero).abs() <= 1e-4,
            "{sign:?}: {at_zero} vs {near_zero}"
        );
    }
}

#[test]
fn zero_weight_reuses_the_plain_inversions() {
    let t = tol(1e-10);
    for (s, a, b) in [(3.0, 0.5, 1.0), (5.5, 0.02, 0.25)] {
        let plus = s_pm_transformed(s, a, b, 0.0, Sign::Plus, t).unwrap();
        let minus = s_pm_transformed(s, a, b, 0.0, Sign::Minus, t).unwrap();
        assert_eq!(
            plus.value.to_bits(),
            kappa_ab_transformed(s, a, b, t).unwrap().value.to_bits()
        );
        assert_eq!(
            minus.value.to_bits(),
            kappa_ab_alt_transformed(s, a, b, t).unwrap().value.to_bits()
        );
    }
}

#[test]
fn equal_shift_case() {
    let t = tol(1e-11);
    for a in [0.05, 0.3, 1.0, 4.0] {
        let plain = corollary_b_equals_a(3.5, a, Sign::Plus, t).unwrap().value;
        let direct = eval_direct(&SumSpec::new(Family::GeneralAb, 3.5).with_a(a).with_b(a).with_tol(t))
            .unwrap()
            .value;
        assert!(within(plain, direct, 3e-11), "a={a}");
        let alt = corollary_b_equals_a(1.8, a, Sign::Minus, t).unwrap().value;
        let direct = eval_direct(&SumSpec::new(Family::GeneralAbAlt, 1.8).with_a(a).with_b(a).with_tol(t))
            .unwrap()
            .value;
        assert!(within(alt, direct, 3e-11), "a={a}");
    }
    assert!(corollary_b_equals_a(2.0, 0.5, Sign::Plus, t).is_err());
    assert!(corollary_b_equals_a(1.5, 0.5, Sign::Minus, t).is_ok());
}

#[test]
fn domains() {
    let t = tol(1e-10);
    assert!(matches!(
        kappa_ab_transformed(2.0, 0.5, 1.0, t),
        Err(Error::Domain { .. })
    ));
    assert!(matches!(
        kappa_ab_alt_transformed(1.0, 0.5, 1.0, t),
        Err(Error::Domain { .. })
    ));
    assert!(kappa_ab_transformed(3.0, 0.0, 1.0, t).is_err());
    assert!(kappa_ab_transformed(3.0, 1.0, -1.0, t).is_err());
    assert!(s_pm_transformed(3.0, 0.5, 1.0, -0.5, Sign::Plus, t).is_err());
    assert!(s_pm_transformed(1.8, 0.5, 1.0, 0.0, Sign::Plus, t).is_err());
    assert!(s_pm_transformed(1.8, 0.5, 1.0, 0.0, Sign::Minus, t).is_ok());
    assert!(eval_transformed(&SumSpec::new(Family::Kappa, 4.0), &EvalOptions::default()).is_err());
}

#[test]
fn term_counts_match_truncating_runs() {
    let t = tol(1e-8);
    for a in [0.1, 0.5, 3.0] {
        let spec = SumSpec::new(Family::GeneralAb, 4.0).with_a(a).with_b(1.0).with_tol(t);
        let report = compare_sides(&spec, &EvalOptions::truncating()).unwrap();
        assert_eq!(
            term_count_estimate(4.0, a, 1.0, t, Side::Direct).unwrap(),
            report.lhs_terms,
            "a={a}"
        );
        assert_eq!(
            term_count_estimate(4.0, a, 1.0, t, Side::Transformed).unwrap(),
            report.rhs_terms,
            "a={a}"
        );
        assert!(report.agreement <= 2e-8);
        assert_eq!(
            report.speedup_estimate,
            report.lhs_terms as f64 / report.rhs_terms as f64
        );
    }
}

#[test]
fn direct_term_count_scaling() {
    // The direct tail behaves like (Ka)^(2-s) / a, so shrinking a tenfold
    // multiplies the direct count by roughly 10^(1 + 1/(s-2)).
    let t = tol(1e-8);
    let d1 = term_count_estimate(4.0, 0.1, 1.0, t, Side::Direct).unwrap() as f64;
    let d2 = term_count_estimate(4.0, 0.01, 1.0, t, Side::Direct).unwrap() as f64;
    let ratio = d2 / d1;
    assert!((ratio / 10f64.powf(1.5) - 1.0).abs() < 0.05, "ratio {ratio}");
}

#[test]
fn selector_follows_predicted_counts() {
    let t = tol(1e-8);
    let pick = |a: f64| choose_method(&SumSpec::new(Family::GeneralAb, 4.0).with_a(a).with_b(1.0).with_tol(t)).unwrap();
    assert_eq!(pick(0.01), Method::Transformed);
    assert_eq!(pick(10.0), Method::Direct);
    for a in [0.02, 0.2, 0.7, 1.5, 5.0, 50.0] {
        let d = term_count_estimate(4.0, a, 1.0, t, Side::Direct).unwrap();
        let r = term_count_estimate(4.0, a, 1.0, t, Side::Transformed).unwrap();
        let want = if r <= d { Method::Transformed } else { Method::Direct };
        assert_eq!(pick(a), want, "a={a}");
        // A pick is never worse than twice the cheaper side.
        let chosen = if pick(a) == Method::Transformed { r } else { d };
        assert!(chosen <= 2 * d.min(r));
    }
    assert!(choose_method(&SumSpec::new(Family::Kappa, 4.0)).is_err());
}

#[test]
fn auto_prefers_closed_forms() {
    let r = eval_auto(&SumSpec::new(Family::Kappa, 4.0), &EvalOptions::default()).unwrap();
    assert_eq!(r.method, Method::ClosedForm);
    let spec = SumSpec::new(Family::GeneralAb, 4.0).with_a(0.01).with_tol(tol(1e-10));
    let r = eval_auto(&spec, &EvalOptions::default()).unwrap();
    assert_eq!(r.method, Method::Transformed);
    assert!((r.value - 40.61318131332323880).abs() < 1e-9);
}

#[test]
fn report_round_trips_through_json() {
    let spec = SumSpec::new(Family::GeneralAbAlt, 3.0)
        .with_a(0.2)
        .with_b(0.5)
        .with_tol(tol(1e-9));
    let report = compare_sides(&spec, &EvalOptions::default()).unwrap();
    let text = serde_json::to_string(&report).unwrap();
    let back: zetasums::TransformReport = serde_json::from_str(&text).unwrap();
    assert_eq!(back, report);
    assert_eq!(serde_json::to_string(&Side::Transformed).unwrap(), "\"TRANSFORMED\"");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn plain_inversion(s in 2.3f64..7.0, a in 0.02f64..5.0, b in 0.1f64..3.0) {
        let t = tol(1e-10);
        let lhs = eval_direct(&SumSpec::new(Family::GeneralAb, s).with_a(a).with_b(b).with_tol(t)).unwrap().value;
        let rhs = kappa_ab_transformed(s, a, b, t).unwrap().value;
        prop_assert!(within(lhs, rhs, 2e-10), "{lhs} vs {rhs}");
    }

    #[test]
    fn alternating_inversion(s in 1.2f64..7.0, a in 0.02f64..5.0, b in 0.1f64..3.0) {
        let t = tol(1e-10);
        let lhs = eval_direct(&SumSpec::new(Family::GeneralAbAlt, s).with_a(a).with_b(b).with_tol(t)).unwrap().value;
        let rhs = kappa_ab_alt_transformed(s, a, b, t).unwrap().value;
        prop_assert!(within(lhs, rhs, 2e-10), "{lhs} vs {rhs}");
    }
}
