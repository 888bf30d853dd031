//! Walk-regular partition of vertex pairs and distance polynomials.
//!
//! Ordered pairs `(y, z)` are grouped by their walk vector
//! `((A^0)_yz, ..., (A^d)_yz)`. Column `j` of `W` is the walk vector of class
//! `R_j`, so `A^l = sum_j W[l][j] M_j`. Row-reducing `W` with its transform
//! gives polynomials `p_i` with `p_i(A) = sum_j Z[i][j] M_j`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{distance_data, Graph};
use crate::linalg::{
    poly_eval_matrix, rref_with_transform, trace_inner, Polynomial, Rational, RationalMatrix,
};
use crate::spectral::{count_distinct_eigenvalues, powers, vectorized_rref};

/// `((A^0)_yz, ..., (A^d)_yz)`.
pub type WalkVector = Vec<BigInt>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalkClass {
    /// Member pairs in row-major order.
    pub pairs: Vec<(usize, usize)>,
    pub walk_vector: WalkVector,
    pub distance: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalkPartition {
    /// One less than the number of distinct eigenvalues.
    pub d: usize,
    /// `R_0..R_r`, ordered by (distance, walk vector). The distance-0 classes
    /// split the diagonal; there is just one when the graph is walk-regular.
    pub classes: Vec<WalkClass>,
    /// `class_of[y][z]` is the index of the class holding `(y, z)`.
    pub class_of: Vec<Vec<usize>>,
    /// `(d+1) x (r+1)`, column `j` the walk vector of `R_j`.
    pub w: RationalMatrix,
    /// RREF of `w`.
    pub z: RationalMatrix,
    /// Pivot column of each row of `z`.
    pub pivots: Vec<usize>,
    /// `p_i(t)`, transform row `i` applied to `(1, t, ..., t^d)`.
    pub polynomials: Vec<Polynomial>,
}

impl WalkPartition {
    pub fn r(&self) -> usize {
        self.classes.len() - 1
    }

    pub fn n(&self) -> usize {
        self.class_of.len()
    }

    /// 0-1 matrix `M_i` of class `R_i`.
    pub fn class_matrix(&self, i: usize) -> RationalMatrix {
        let n = self.n();
        RationalMatrix::from_fn(n, n, |y, z| {
            if self.class_of[y][z] == i {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    }

    /// Indices of the classes at distance `i`.
    pub fn classes_at_distance(&self, i: usize) -> Vec<usize> {
        (0..self.classes.len())
            .filter(|&j| self.classes[j].distance == i)
            .collect()
    }
}

fn integer_entries(m: &RationalMatrix) -> Result<Vec<BigInt>> {
    m.to_integers()
        .ok_or_else(|| Error::Invariant("power of an adjacency matrix is not integral".into()))
}

pub fn walk_partition(g: &Graph) -> Result<WalkPartition> {
    g.require_connected()?;
    let n = g.n();
    let a = g.adjacency();
    let d = count_distinct_eigenvalues(a)?.saturating_sub(1);
    let pows: Vec<Vec<BigInt>> = powers(a, d)?
        .iter()
        .map(integer_entries)
        .collect::<Result<_>>()?;

    let vectors: Vec<Vec<WalkVector>> = (0..n)
        .into_par_iter()
        .map(|y| {
            (0..n)
                .map(|z| pows.iter().map(|p| p[y * n + z].clone()).collect())
                .collect()
        })
        .collect();

    let mut groups: BTreeMap<(usize, &WalkVector), Vec<(usize, usize)>> = BTreeMap::new();
    for (y, row) in vectors.iter().enumerate() {
        for (z, v) in row.iter().enumerate() {
            let distance = v.iter().position(|x| !x.is_zero()).ok_or_else(|| {
                Error::Invariant(format!("pair ({y},{z}) has no walks of length <= {d}"))
            })?;
            groups.entry((distance, v)).or_default().push((y, z));
        }
    }

    let dd = distance_data(g)?;
    let mut class_of = vec![vec![0usize; n]; n];
    let mut classes = Vec::with_capacity(groups.len());
    for (index, ((distance, v), pairs)) in groups.into_iter().enumerate() {
        for &(y, z) in &pairs {
            if dd.distance(y, z) != distance {
                return Err(Error::Invariant(format!(
                    "pair ({y},{z}) is at distance {} but its class is at {distance}",
                    dd.distance(y, z)
                )));
            }
            class_of[y][z] = index;
        }
        classes.push(WalkClass {
            pairs,
            walk_vector: v.clone(),
            distance,
        });
    }
    let w = RationalMatrix::from_fn(d + 1, classes.len(), |l, j| {
        Rational::from_integer(classes[j].walk_vector[l].clone())
    });
    let rref = rref_with_transform(&w);
    if rref.rank != d + 1 {
        return Err(Error::Invariant(format!(
            "rank(W) = {}, expected {}",
            rref.rank,
            d + 1
        )));
    }
    let polynomials = (0..rref.rank)
        .map(|i| Polynomial::new(rref.transform.row(i).to_vec()))
        .collect();
    Ok(WalkPartition {
        d,
        classes,
        class_of,
        w,
        z: rref.reduced,
        pivots: rref.pivots,
        polynomials,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientPolynomialDiagnostics {
    pub d: usize,
    pub r: usize,
    pub z_is_identity: bool,
    /// Number of distinct walk vectors.
    pub walk_vector_count: usize,
    pub rank_w: usize,
    /// Whether every class matrix `M_i` lies in `span{I, A, ..., A^d}`.
    pub classes_in_algebra: bool,
}

/// Decides quotient-polynomiality through several equivalent conditions
/// and fails with an invariant error if they disagree.
pub fn is_quotient_polynomial(g: &Graph) -> Result<(bool, QuotientPolynomialDiagnostics)> {
    let wp = walk_partition(g)?;
    is_quotient_polynomial_from(g, &wp)
}

pub fn is_quotient_polynomial_from(
    g: &Graph,
    wp: &WalkPartition,
) -> Result<(bool, QuotientPolynomialDiagnostics)> {
    let (d, r) = (wp.d, wp.r());
    let z_is_identity = wp.z.is_square() && wp.z == RationalMatrix::identity(wp.z.rows());
    let rank_w = crate::linalg::rank(&wp.w);
    let span = vectorized_rref(&powers(g.adjacency(), d)?);
    let classes_in_algebra =
        (0..=r).all(|i| span.coordinates(&wp.class_matrix(i).vectorize()).is_some());
    let diag = QuotientPolynomialDiagnostics {
        d,
        r,
        z_is_identity,
        walk_vector_count: wp.classes.len(),
        rank_w,
        classes_in_algebra,
    };
    let verdicts = [
        d == r,
        z_is_identity,
        diag.walk_vector_count == d + 1,
        rank_w == r + 1,
        classes_in_algebra,
    ];
    if verdicts.iter().any(|&v| v != verdicts[0]) {
        return Err(Error::Invariant(format!(
            "quotient-polynomial conditions disagree: {verdicts:?} ({diag:?})"
        )));
    }
    Ok((verdicts[0], diag))
}

/// For each distance `i = 0..D`, a polynomial `q` with `q(A) = A_i` when
/// one exists.
///
/// `A_i` is the sum of the class matrices at distance `i`, so it lies in the
/// algebra exactly when its indicator row is in the row space of `Z`. The
/// coefficient on row `k` is then the indicator at the pivot of row `k`, so
/// the candidate is the sum of the rows pivoting inside those columns.
pub fn distance_matrix_polynomials(g: &Graph) -> Result<Vec<Option<Polynomial>>> {
    let wp = walk_partition(g)?;
    distance_matrix_polynomials_from(g, &wp)
}

pub fn distance_matrix_polynomials_from(
    g: &Graph,
    wp: &WalkPartition,
) -> Result<Vec<Option<Polynomial>>> {
    Ok(distance_matrix_expansions(g, wp)?
        .into_iter()
        .map(|rows| rows.map(|rows| sum_rows(wp, &rows)))
        .collect())
}

fn sum_rows(wp: &WalkPartition, rows: &[usize]) -> Polynomial {
    rows.iter()
        .fold(Polynomial::zero(), |acc, &k| acc.add(&wp.polynomials[k]))
}

/// For each distance `i`, the rows `k` of `Z` with `A_i = sum_k p_k(A)`, when
/// `A_i` is a polynomial in `A`.
pub fn distance_matrix_expansions(g: &Graph, wp: &WalkPartition) -> Result<Vec<Option<Vec<usize>>>> {
    let dd = distance_data(g)?;
    let cols = wp.classes.len();
    let mut out = Vec::with_capacity(dd.diameter + 1);
    for i in 0..=dd.diameter {
        let at_distance: Vec<bool> = wp.classes.iter().map(|c| c.distance == i).collect();
        let rows: Vec<usize> = (0..wp.pivots.len())
            .filter(|&k| at_distance[wp.pivots[k]])
            .collect();
        let mut sum = vec![Rational::zero(); cols];
        for &k in &rows {
            for (slot, x) in sum.iter_mut().zip(wp.z.row(k)) {
                *slot += x;
            }
        }
        let matches = sum
            .iter()
            .zip(&at_distance)
            .all(|(x, &inside)| if inside { x.is_one() } else { x.is_zero() });
        if !matches {
            out.push(None);
            continue;
        }
        if poly_eval_matrix(&sum_rows(wp, &rows), g.adjacency())? != dd.matrices[i] {
            return Err(Error::Invariant(format!(
                "distance-{i} polynomial does not evaluate to A_{i}"
            )));
        }
        out.push(Some(rows));
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrthogonalityReport {
    /// `gram[i][j] = <p_i(A), p_j(A)>`.
    pub gram: Vec<Vec<Rational>>,
    pub pairwise_orthogonal: bool,
    pub sums_to_j: bool,
}

/// Checks that the class polynomials of a quotient-polynomial graph are
/// orthogonal under the trace inner product and sum to `J`.
pub fn quotient_polynomial_orthogonality(g: &Graph) -> Result<OrthogonalityReport> {
    let wp = walk_partition(g)?;
    if !is_quotient_polynomial_from(g, &wp)?.0 {
        return Err(Error::NotQuotientPolynomial);
    }
    let evaluated: Vec<RationalMatrix> = wp
        .polynomials
        .iter()
        .map(|p| poly_eval_matrix(p, g.adjacency()))
        .collect::<Result<_>>()?;
    let size = evaluated.len();
    let mut gram = vec![vec![Rational::zero(); size]; size];
    for i in 0..size {
        for j in i..size {
            let v = trace_inner(&evaluated[i], &evaluated[j])?;
            gram[j][i] = v.clone();
            gram[i][j] = v;
        }
    }
    let pairwise_orthogonal =
        (0..size).all(|i| (0..size).all(|j| i == j || gram[i][j].is_zero()));
    let total = evaluated
        .iter()
        .try_fold(RationalMatrix::zeros(g.n(), g.n()), |acc, m| acc.add(m))?;
    Ok(OrthogonalityReport {
        gram,
        pairwise_orthogonal,
        sums_to_j: total == RationalMatrix::ones(g.n()),
    })
}
