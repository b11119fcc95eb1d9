//! Exact arithmetic: rationals, cyclotomic fields ℚ(ζ_N) and dense matrices
//! over them.

mod cyclotomic;
pub mod linalg;
mod matrix;
pub mod poly;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

pub use cyclotomic::{embed_numeric, root_of_unity, Cyclotomic, CyclotomicField};
pub use matrix::{matrix_rank_det, CycMatrix};
pub use poly::cyclotomic_polynomial;

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("cannot parse rational {0:?}")]
    ParseRational(String),
}

/// Parse `"a/b"` or `"a"`.
pub fn parse_rational(s: &str) -> Result<Rational, ExactError> {
    let err = || ExactError::ParseRational(s.to_string());
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| err())?;
    let den: BigInt = den.parse().map_err(|_| err())?;
    if den.is_zero() {
        return Err(err());
    }
    Ok(Rational::new(num, den))
}

/// `"a/b"`, or `"a"` for integers.
pub fn format_rational(q: &Rational) -> String {
    q.to_string()
}

pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}
