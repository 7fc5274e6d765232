use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::coeffs::{rational_to_f64, RationalCoeffs};
use crate::error::{domain, Result};

/// Largest Bernoulli index held in the table.
pub const MAX_BERNOULLI_INDEX: usize = 64;

struct Table {
    exact: Vec<BigRational>,
    float: Vec<f64>,
}

static TABLE: OnceLock<Table> = OnceLock::new();

fn table() -> &'static Table {
    TABLE.get_or_init(|| {
        let exact = generate(MAX_BERNOULLI_INDEX);
        let float = exact.iter().map(rational_to_f64).collect();
        Table { exact, float }
    })
}

// B_m = -1/(m+1) * sum_{j<m} C(m+1, j) B_j, which gives B_1 = -1/2.
fn generate(n_max: usize) -> Vec<BigRational> {
    let mut b: Vec<BigRational> = Vec::with_capacity(n_max + 1);
    b.push(BigRational::one());
    for m in 1..=n_max {
        if m > 1 && m % 2 == 1 {
            b.push(BigRational::zero());
            continue;
        }
        let mut acc = BigRational::zero();
        for (j, bj) in b.iter().enumerate() {
            if bj.is_zero() {
                continue;
            }
            let c = binomial(BigInt::from(m + 1), BigInt::from(j));
            acc += bj * BigRational::from_integer(c);
        }
        b.push(-acc / BigRational::from_integer(BigInt::from(m + 1)));
    }
    b
}

/// Bernoulli numbers `B_0..=B_{n_max}` as exact rationals, with `B_1 = -1/2`.
pub fn bernoulli_numbers(n_max: usize) -> Result<RationalCoeffs> {
    if n_max > MAX_BERNOULLI_INDEX {
        return Err(domain(
            "bernoulli_numbers",
            format!("n_max <= {MAX_BERNOULLI_INDEX}"),
            format!("n_max = {n_max}"),
        ));
    }
    Ok(RationalCoeffs::new(table().exact[..=n_max].to_vec(), 0))
}

/// `B_n` rounded to binary64. Panics when `n` exceeds the table.
pub fn bernoulli_f64(n: usize) -> f64 {
    table().float[n]
}

pub(crate) fn bernoulli_exact(n: usize) -> &'static BigRational {
    &table().exact[n]
}
