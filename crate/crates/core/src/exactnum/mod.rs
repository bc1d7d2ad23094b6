//! Exact rationals and cyclotomic fields Q(ζ_N).

mod cyclotomic;

pub use cyclotomic::{cyclotomic_poly, zeta, Cyclotomic, MAX_ORDER};

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactError {
    #[error("cyclotomic order {0} outside 1..={MAX_ORDER}")]
    OrderOutOfRange(u32),
    #[error("division by zero")]
    DivisionByZero,
}
