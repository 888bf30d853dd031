//! Exact rational scalars, polynomials and dense matrices.
//!
//! Nothing in here touches floating point. Every value is an arbitrary
//! precision rational kept in lowest terms by `num-rational`.

mod matrix;
mod poly;
mod rref;

pub use matrix::{hadamard, mat_mul, trace_inner, RationalMatrix};
pub use poly::{poly_eval_matrix, Polynomial};
pub use rref::{rank, rref_with_transform, Rref};

use num_bigint::BigInt;

/// Exact rational scalar, always in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;

/// Builds `num / den`.
///
/// Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Formats as `num/den`, or just `num` when the denominator is one.
pub fn format_rational(value: &Rational) -> String {
    if value.is_integer() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// Parses `num/den` or a plain integer.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    match text.split_once('/') {
        Some((num, den)) => {
            let num: BigInt = num.trim().parse().ok()?;
            let den: BigInt = den.trim().parse().ok()?;
            if den == BigInt::from(0) {
                return None;
            }
            Some(Rational::new(num, den))
        }
        None => Some(Rational::from_integer(text.parse().ok()?)),
    }
}
