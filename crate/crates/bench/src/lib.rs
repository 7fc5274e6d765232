//! Fixed workloads shared by the benchmarks in `benches/`.

use zetasums::{Family, Sign, SumSpec, Tolerance};

/// Accuracy used by every benchmark workload.
pub const BENCH_TOL: f64 = 1e-8;

fn tol() -> Tolerance {
    Tolerance::absolute(BENCH_TOL).expect("benchmark tolerance is valid")
}

/// `sum_k zeta(4, ka + 1)` for the given `a`.
pub fn general_ab(a: f64) -> SumSpec {
    SumSpec::new(Family::GeneralAb, 4.0)
        .with_a(a)
        .with_b(1.0)
        .with_tol(tol())
}

/// One spec per family, each at a comfortably convergent `s`.
pub fn family_specs() -> Vec<(&'static str, SumSpec)> {
    vec![
        ("kappa", SumSpec::new(Family::Kappa, 4.0).with_tol(tol())),
        ("kappa-alt", SumSpec::new(Family::KappaAlt, 2.0).with_tol(tol())),
        ("moment-m2", SumSpec::new(Family::Moment, 6.0).with_m(2).with_tol(tol())),
        (
            "moment-alt-m1",
            SumSpec::new(Family::MomentAlt, 3.5).with_m(1).with_tol(tol()),
        ),
        (
            "even-arg-m1",
            SumSpec::new(Family::EvenArgMoment, 5.0).with_m(1).with_tol(tol()),
        ),
        (
            "exp-weighted-minus",
            SumSpec::new(Family::ExpWeighted, 2.0)
                .with_a(0.25)
                .with_b(0.5)
                .with_c(1.2)
                .with_sign(Sign::Minus)
                .with_tol(tol()),
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn workloads_are_valid() {
        for (_, spec) in family_specs() {
            spec.validate().unwrap();
        }
        general_ab(0.01).validate().unwrap();
    }
}
