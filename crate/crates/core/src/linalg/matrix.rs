use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::Rational;
use crate::error::{Error, Result};

/// Row count above which `mat_mul` splits work across threads.
const PARALLEL_ROWS: usize = 24;

/// Dense row-major matrix of exact rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::InvalidArgument(format!(
                "{} entries cannot fill a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |r, c| {
            if r == c {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    }

    /// The all-ones matrix `J`.
    pub fn ones(n: usize) -> Self {
        Self {
            rows: n,
            cols: n,
            entries: vec![Rational::one(); n * n],
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Self {
            rows,
            cols,
            entries,
        }
    }

    /// Builds a matrix from integer rows. Panics on ragged input.
    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Self::from_fn(rows.len(), cols, |r, c| {
            Rational::from_integer(BigInt::from(rows[r][c]))
        })
    }

    /// Reshapes a row-major vector into an `n x n` matrix.
    pub fn from_vectorized(n: usize, entries: Vec<Rational>) -> Result<Self> {
        Self::new(n, n, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Rational) {
        self.entries[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    /// Row-major concatenation of the rows.
    pub fn vectorize(&self) -> Vec<Rational> {
        self.entries.clone()
    }

    pub fn into_entries(self) -> Vec<Rational> {
        self.entries
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| (r + 1..self.cols).all(|c| self.get(r, c) == self.get(c, r)))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// True when every entry is 0 or 1.
    pub fn is_binary(&self) -> bool {
        self.entries.iter().all(|v| v.is_zero() || v.is_one())
    }

    pub fn is_integral(&self) -> bool {
        self.entries.iter().all(|v| v.is_integer())
    }

    /// First entry that is neither 0 nor 1, as `(row, col, value)`.
    pub fn first_non_binary(&self) -> Option<(usize, usize, Rational)> {
        self.entries
            .iter()
            .position(|v| !(v.is_zero() || v.is_one()))
            .map(|i| (i / self.cols, i % self.cols, self.entries[i].clone()))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    fn check_same_shape(&self, other: &Self, op: &'static str) -> Result<()> {
        if self.shape() != other.shape() {
            return Err(Error::DimensionMismatch {
                op,
                left: self.shape(),
                right: other.shape(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other, "add")?;
        Ok(self.zip_map(other, |a, b| a + b))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other, "sub")?;
        Ok(self.zip_map(other, |a, b| a - b))
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        if factor.is_zero() {
            return Self::zeros(self.rows, self.cols);
        }
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|v| v * factor).collect(),
        }
    }

    /// `self + factor * other`, skipping the work when `factor` is zero.
    pub fn add_scaled(&self, factor: &Rational, other: &Self) -> Result<Self> {
        self.check_same_shape(other, "add_scaled")?;
        if factor.is_zero() {
            return Ok(self.clone());
        }
        Ok(self.zip_map(other, |a, b| {
            if b.is_zero() {
                a.clone()
            } else {
                a + b * factor
            }
        }))
    }

    fn zip_map(&self, other: &Self, f: impl Fn(&Rational, &Rational) -> Rational) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        mat_mul(self, other)
    }

    pub fn pow(&self, exponent: usize) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut acc = Self::identity(self.rows);
        for _ in 0..exponent {
            acc = mat_mul(&acc, self)?;
        }
        Ok(acc)
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols))
            .map(|i| self.get(i, i))
            .fold(Rational::zero(), |acc, v| acc + v)
    }

    pub fn entry_sum(&self) -> Rational {
        self.entries
            .iter()
            .fold(Rational::zero(), |acc, v| acc + v)
    }

    /// Number of distinct values among the entries.
    pub fn distinct_entry_count(&self) -> usize {
        self.entries.iter().collect::<BTreeSet<_>>().len()
    }

    /// Kronecker (tensor) product.
    pub fn kronecker(&self, other: &Self) -> Self {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        Self::from_fn(rows, cols, |r, c| {
            self.get(r / other.rows, c / other.cols) * other.get(r % other.rows, c % other.cols)
        })
    }

    /// Numerators of an integral matrix; `None` if some entry has a denominator.
    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.entries
            .iter()
            .map(|v| v.is_integer().then(|| v.numer().clone()))
            .collect()
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(super::format_rational).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for r in 0..self.rows {
            let line: Vec<String> = (0..self.cols)
                .map(|c| format!("{:>width$}", cells[r * self.cols + c]))
                .collect();
            writeln!(f, "[{}]", line.join(" "))?;
        }
        Ok(())
    }
}

/// Exact matrix product.
///
/// Rows of the result are computed independently, so the parallel path
/// produces exactly the same matrix as the sequential one.
pub fn mat_mul(a: &RationalMatrix, b: &RationalMatrix) -> Result<RationalMatrix> {
    if a.cols != b.rows {
        return Err(Error::DimensionMismatch {
            op: "mat_mul",
            left: a.shape(),
            right: b.shape(),
        });
    }
    let (rows, inner, cols) = (a.rows, a.cols, b.cols);
    let entries: Vec<Rational> = match (a.to_integers(), b.to_integers()) {
        (Some(ai), Some(bi)) => {
            let row_of = |r: usize| -> Vec<Rational> {
                let mut acc = vec![BigInt::zero(); cols];
                for k in 0..inner {
                    let x = &ai[r * inner + k];
                    if x.is_zero() {
                        continue;
                    }
                    for (c, slot) in acc.iter_mut().enumerate() {
                        let y = &bi[k * cols + c];
                        if !y.is_zero() {
                            *slot += x * y;
                        }
                    }
                }
                acc.into_iter().map(Rational::from_integer).collect()
            };
            collect_rows(rows, row_of)
        }
        _ => {
            let row_of = |r: usize| -> Vec<Rational> {
                let mut acc = vec![Rational::zero(); cols];
                for k in 0..inner {
                    let x = a.get(r, k);
                    if x.is_zero() {
                        continue;
                    }
                    for (c, slot) in acc.iter_mut().enumerate() {
                        let y = b.get(k, c);
                        if !y.is_zero() {
                            *slot += x * y;
                        }
                    }
                }
                acc
            };
            collect_rows(rows, row_of)
        }
    };
    Ok(RationalMatrix {
        rows,
        cols,
        entries,
    })
}

fn collect_rows(rows: usize, row_of: impl Fn(usize) -> Vec<Rational> + Sync + Send) -> Vec<Rational> {
    if rows >= PARALLEL_ROWS {
        (0..rows).into_par_iter().flat_map_iter(&row_of).collect()
    } else {
        (0..rows).flat_map(&row_of).collect()
    }
}

/// Entrywise (Hadamard) product.
pub fn hadamard(a: &RationalMatrix, b: &RationalMatrix) -> Result<RationalMatrix> {
    a.check_same_shape(b, "hadamard")?;
    Ok(a.zip_map(b, |x, y| x * y))
}

/// `(1/n) trace(a b)` for square `n x n` inputs.
///
/// Evaluated as `(1/n) sum_{ij} a_ij b_ji`, which is the trace of the
/// product without forming it.
pub fn trace_inner(a: &RationalMatrix, b: &RationalMatrix) -> Result<Rational> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows,
            cols: a.cols,
        });
    }
    a.check_same_shape(b, "trace_inner")?;
    let n = a.rows;
    if n == 0 {
        return Ok(Rational::zero());
    }
    Ok(trace_of_product(a, b) / Rational::from_integer(BigInt::from(n)))
}

/// Un-normalized `trace(a b)` for same-shape square matrices.
pub(crate) fn trace_of_product(a: &RationalMatrix, b: &RationalMatrix) -> Rational {
    let n = a.rows;
    let mut acc = Rational::zero();
    for i in 0..n {
        for j in 0..n {
            let x = a.get(i, j);
            if x.is_zero() {
                continue;
            }
            let y = b.get(j, i);
            if !y.is_zero() {
                acc += x * y;
            }
        }
    }
    acc
}
