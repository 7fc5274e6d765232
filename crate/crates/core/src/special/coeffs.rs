use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Serialize, Serializer};

/// A vector of exact rational coefficients `c_0, c_1, ...` multiplying
/// `n^offset, n^(offset+1), ...`.
///
/// Fractions are kept in lowest terms with positive denominators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalCoeffs {
    coeffs: Vec<BigRational>,
    offset: i32,
}

impl RationalCoeffs {
    pub fn new(coeffs: Vec<BigRational>, offset: i32) -> Self {
        // BigRational::new reduces and normalizes the sign on construction.
        Self { coeffs, offset }
    }

    pub fn from_integers<I: IntoIterator<Item = BigInt>>(ints: I, offset: i32) -> Self {
        Self::new(ints.into_iter().map(BigRational::from_integer).collect(), offset)
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn offset(&self) -> i32 {
        self.offset
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn get(&self, i: usize) -> Option<&BigRational> {
        self.coeffs.get(i)
    }

    pub fn numerators(&self) -> Vec<BigInt> {
        self.coeffs.iter().map(|c| c.numer().clone()).collect()
    }

    pub fn denominators(&self) -> Vec<BigInt> {
        self.coeffs.iter().map(|c| c.denom().clone()).collect()
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.coeffs.iter().map(rational_to_f64).collect()
    }

    /// Exact value of `sum_i c_i n^(offset+i)` at an integer point. Negative
    /// total powers are not supported.
    pub fn eval_integer(&self, n: &BigInt) -> BigRational {
        assert!(self.offset >= 0, "eval_integer needs a non-negative offset");
        let x = BigRational::from_integer(n.clone());
        let mut power = num_traits::pow(x.clone(), self.offset as usize);
        let mut acc = BigRational::zero();
        for c in &self.coeffs {
            acc += c * &power;
            power *= &x;
        }
        acc
    }

    /// Coefficients rendered as `p/q` (or `p` when integral).
    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(rational_string).collect()
    }
}

pub(crate) fn rational_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

pub(crate) fn rational_string(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl Serialize for RationalCoeffs {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("RationalCoeffs", 2)?;
        st.serialize_field("offset", &self.offset)?;
        st.serialize_field("coefficients", &self.to_strings())?;
        st.end()
    }
}
