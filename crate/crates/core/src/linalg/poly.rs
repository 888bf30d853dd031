use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{format_rational, Rational, RationalMatrix};
use crate::error::{Error, Result};

/// Univariate polynomial with rational coefficients; index `i` holds the
/// coefficient of `t^i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coefficients: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coefficients: Vec<Rational>) -> Self {
        while coefficients.last().is_some_and(Zero::is_zero) {
            coefficients.pop();
        }
        Self { coefficients }
    }

    pub fn from_i64(coefficients: &[i64]) -> Self {
        Self::new(
            coefficients
                .iter()
                .map(|&c| Rational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(value: Rational) -> Self {
        Self::new(vec![value])
    }

    /// `coefficient * t^power`.
    pub fn monomial(coefficient: Rational, power: usize) -> Self {
        let mut coefficients = vec![Rational::zero(); power + 1];
        coefficients[power] = coefficient;
        Self::new(coefficients)
    }

    /// The polynomial `t`.
    pub fn t() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    pub fn coefficient(&self, power: usize) -> Rational {
        self.coefficients
            .get(power)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coefficients.len().max(other.coefficients.len());
        Self::new(
            (0..len)
                .map(|i| self.coefficient(i) + other.coefficient(i))
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        Self::new(self.coefficients.iter().map(|c| c * factor).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rational::zero(); self.coefficients.len() + other.coefficients.len() - 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            for (j, b) in other.coefficients.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coefficients
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// Coefficients as `num/den` strings, constant term first.
    pub fn coefficient_strings(&self) -> Vec<String> {
        self.coefficients.iter().map(format_rational).collect()
    }
}

fn superscript(power: usize) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    power
        .to_string()
        .chars()
        .map(|d| DIGITS[d.to_digit(10).unwrap() as usize])
        .collect()
}

/// Highest power first, e.g. `−1/32·t⁴ + 5/8·t² − 1`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (power, coefficient) in self.coefficients.iter().enumerate().rev() {
            if coefficient.is_zero() {
                continue;
            }
            let negative = coefficient.is_negative();
            let magnitude = coefficient.abs();
            match (first, negative) {
                (true, true) => write!(f, "−")?,
                (true, false) => {}
                (false, true) => write!(f, " − ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let variable = match power {
                0 => String::new(),
                1 => "t".to_owned(),
                p => format!("t{}", superscript(p)),
            };
            if power == 0 {
                write!(f, "{}", format_rational(&magnitude))?;
            } else if magnitude.is_one() {
                write!(f, "{variable}")?;
            } else {
                write!(f, "{}·{variable}", format_rational(&magnitude))?;
            }
        }
        Ok(())
    }
}

/// Evaluates `p(a)` exactly by Horner's rule.
pub fn poly_eval_matrix(p: &Polynomial, a: &RationalMatrix) -> Result<RationalMatrix> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = a.rows();
    let identity = RationalMatrix::identity(n);
    let mut acc = RationalMatrix::zeros(n, n);
    for c in p.coefficients().iter().rev() {
        acc = acc.mul(a)?.add_scaled(c, &identity)?;
    }
    Ok(acc)
}
