use num_traits::{One, Zero};

use super::{Rational, RationalMatrix};

/// Reduced row echelon form together with the row operations that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    /// The unique reduced row echelon form `R`.
    pub reduced: RationalMatrix,
    /// Invertible `T` with `R = T * M`.
    pub transform: RationalMatrix,
    pub rank: usize,
    /// Pivot column of each of the first `rank` rows of `R`.
    pub pivots: Vec<usize>,
}

impl Rref {
    /// Coordinates of `v` against the nonzero rows of `R`, if `v` lies in the
    /// row space.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(v.len(), self.reduced.cols(), "vector length mismatch");
        let coords: Vec<Rational> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut residual = v.to_vec();
        for (row, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (slot, x) in residual.iter_mut().zip(self.reduced.row(row)) {
                if !x.is_zero() {
                    *slot -= c * x;
                }
            }
        }
        residual.iter().all(Zero::is_zero).then_some(coords)
    }
}

/// Gauss-Jordan elimination with exact arithmetic.
///
/// Pivot search takes the leftmost column holding a nonzero entry at or
/// below the current row, and within it the topmost such entry. Each pivot
/// is scaled to one and cleared above and below, so the result is the
/// canonical RREF and the transform is fully determined by the input.
pub fn rref_with_transform(m: &RationalMatrix) -> Rref {
    let (rows, cols) = m.shape();
    let mut work: Vec<Vec<Rational>> = (0..rows).map(|r| m.row(r).to_vec()).collect();
    let mut trans: Vec<Vec<Rational>> = (0..rows)
        .map(|r| {
            (0..rows)
                .map(|c| if r == c { Rational::one() } else { Rational::zero() })
                .collect()
        })
        .collect();
    let mut pivots = Vec::new();
    let mut lead = 0;
    for col in 0..cols {
        if lead == rows {
            break;
        }
        let Some(pivot_row) = (lead..rows).find(|&r| !work[r][col].is_zero()) else {
            continue;
        };
        work.swap(lead, pivot_row);
        trans.swap(lead, pivot_row);

        let inv = work[lead][col].recip();
        if !inv.is_one() {
            scale_row(&mut work[lead], &inv);
            scale_row(&mut trans[lead], &inv);
        }
        for r in 0..rows {
            if r == lead || work[r][col].is_zero() {
                continue;
            }
            let factor = work[r][col].clone();
            let (target, source) = pick_two(&mut work, r, lead);
            sub_scaled(target, &factor, source);
            let (target, source) = pick_two(&mut trans, r, lead);
            sub_scaled(target, &factor, source);
        }
        pivots.push(col);
        lead += 1;
    }
    let reduced = RationalMatrix::new(rows, cols, work.into_iter().flatten().collect())
        .expect("shape preserved");
    let transform = RationalMatrix::new(rows, rows, trans.into_iter().flatten().collect())
        .expect("shape preserved");
    Rref {
        reduced,
        transform,
        rank: pivots.len(),
        pivots,
    }
}

pub fn rank(m: &RationalMatrix) -> usize {
    rref_with_transform(m).rank
}

fn scale_row(row: &mut [Rational], factor: &Rational) {
    for x in row.iter_mut().filter(|x| !x.is_zero()) {
        *x *= factor;
    }
}

fn sub_scaled(target: &mut [Rational], factor: &Rational, source: &[Rational]) {
    for (t, s) in target.iter_mut().zip(source) {
        if !s.is_zero() {
            *t -= factor * s;
        }
    }
}

fn pick_two<T>(v: &mut [T], target: usize, source: usize) -> (&mut T, &T) {
    debug_assert_ne!(target, source);
    if target < source {
        let (lo, hi) = v.split_at_mut(source);
        (&mut lo[target], &hi[0])
    } else {
        let (lo, hi) = v.split_at_mut(target);
        (&mut hi[0], &lo[source])
    }
}
