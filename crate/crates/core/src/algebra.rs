//! The standard 0-1 basis of a Hadamard-closed adjacency algebra and the
//! structure it carries.

use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::graph::{DistanceData, Graph};
use crate::linalg::{mat_mul, Polynomial, Rational, RationalMatrix};
use crate::spectral::{
    count_distinct_eigenvalues, krylov_rank, powers, transform_row_polynomial, vectorized_rref,
};

/// The unique basis `F_0..F_d` of `span{I, A, ..., A^d}` made of disjoint
/// symmetric 0-1 matrices, in RREF pivot order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardBasis {
    pub matrices: Vec<RationalMatrix>,
    /// Index `m` with `F_m = I`.
    pub identity_index: usize,
    /// `intersection_numbers[h][i][j] = p^h_ij`, so `F_i F_j = sum_h p^h_ij F_h`.
    pub intersection_numbers: Vec<Vec<Vec<Rational>>>,
    /// `F_i = polynomials[i](A)`.
    pub polynomials: Vec<Polynomial>,
    adjacency: RationalMatrix,
    /// Row-major position of the leading 1 of each `F_i`.
    pivots: Vec<usize>,
}

impl StandardBasis {
    pub fn len(&self) -> usize {
        self.matrices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matrices.is_empty()
    }

    /// `d`, one less than the dimension of the algebra.
    pub fn d(&self) -> usize {
        self.matrices.len() - 1
    }

    pub fn adjacency(&self) -> &RationalMatrix {
        &self.adjacency
    }

    /// Coefficients of `m` in the basis, if `m` lies in the algebra.
    pub fn coordinates(&self, m: &RationalMatrix) -> Option<Vec<Rational>> {
        let n = self.adjacency.rows();
        if m.shape() != (n, n) {
            return None;
        }
        let coords: Vec<Rational> = self
            .pivots
            .iter()
            .map(|&p| m.entries()[p].clone())
            .collect();
        let rebuilt = combine(&self.matrices, &coords);
        (rebuilt == *m).then_some(coords)
    }

    /// Common row sum of `F_i`.
    pub fn valency(&self, i: usize) -> usize {
        let f = &self.matrices[i];
        f.row(0).iter().filter(|x| x.is_one()).count()
    }

    /// Distance between the vertex pairs that `F_i` relates.
    pub fn distance_of(&self, i: usize, dd: &DistanceData) -> usize {
        let n = self.adjacency.rows();
        let p = self.pivots[i];
        dd.distance(p / n, p % n)
    }

    /// Indices sorted by (distance, valency, pivot position), for display.
    pub fn distance_order(&self, dd: &DistanceData) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&i| (self.distance_of(i, dd), self.valency(i), self.pivots[i]));
        order
    }
}

fn combine(matrices: &[RationalMatrix], coords: &[Rational]) -> RationalMatrix {
    let (r, c) = matrices[0].shape();
    matrices
        .iter()
        .zip(coords)
        .fold(RationalMatrix::zeros(r, c), |acc, (m, k)| {
            acc.add_scaled(k, m).expect("same shape")
        })
}

/// Certificate that the span of the powers is not Hadamard-closed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClosureWitness {
    /// Row `index` of the reduced power basis has an entry outside {0, 1}.
    NonBinaryEntry {
        index: usize,
        row: usize,
        col: usize,
        value: Rational,
    },
    /// `F_i ∘ F_j` is a nonzero 0-1 matrix vanishing on every pivot, so it
    /// is not in the span.
    ProductOutsideSpan { i: usize, j: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureFailure {
    pub witness: ClosureWitness,
    /// The reduced basis rows the witness refers to.
    pub reduced: Vec<RationalMatrix>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BasisOutcome {
    Closed(StandardBasis),
    NotClosed(ClosureFailure),
}

impl BasisOutcome {
    pub fn basis(&self) -> Option<&StandardBasis> {
        match self {
            Self::Closed(b) => Some(b),
            Self::NotClosed(_) => None,
        }
    }

    pub fn is_closed(&self) -> bool {
        matches!(self, Self::Closed(_))
    }
}

struct ReducedPowers {
    matrices: Vec<RationalMatrix>,
    polynomials: Vec<Polynomial>,
    pivots: Vec<usize>,
}

/// Row-reduces the vectorized powers `I, A, ..., A^d` and checks that the
/// rows are disjoint 0-1 matrices. Works for any symmetric matrix.
fn reduce_powers(a: &RationalMatrix) -> Result<std::result::Result<ReducedPowers, ClosureFailure>> {
    let n = a.rows();
    let d_plus_1 = count_distinct_eigenvalues(a)?;
    let rref = vectorized_rref(&powers(a, d_plus_1 - 1)?);
    if rref.rank != d_plus_1 {
        return Err(Error::Invariant(format!(
            "powers up to A^{} have rank {}, expected {d_plus_1}",
            d_plus_1 - 1,
            rref.rank
        )));
    }
    let matrices: Vec<RationalMatrix> = (0..d_plus_1)
        .map(|i| RationalMatrix::from_vectorized(n, rref.reduced.row(i).to_vec()))
        .collect::<Result<_>>()?;
    let fail = |witness, matrices: Vec<RationalMatrix>| {
        Ok(Err(ClosureFailure {
            witness,
            reduced: matrices,
        }))
    };
    for (index, f) in matrices.iter().enumerate() {
        if let Some((row, col, value)) = f.first_non_binary() {
            return fail(
                ClosureWitness::NonBinaryEntry {
                    index,
                    row,
                    col,
                    value,
                },
                matrices,
            );
        }
    }
    for i in 0..d_plus_1 {
        for j in i + 1..d_plus_1 {
            let overlap = matrices[i]
                .entries()
                .iter()
                .zip(matrices[j].entries())
                .any(|(x, y)| x.is_one() && y.is_one());
            if overlap {
                return fail(ClosureWitness::ProductOutsideSpan { i, j }, matrices);
            }
        }
    }
    let polynomials = (0..d_plus_1)
        .map(|i| transform_row_polynomial(&rref, i))
        .collect();
    Ok(Ok(ReducedPowers {
        matrices,
        polynomials,
        pivots: rref.pivots,
    }))
}

/// Whether `span{I, A, ..., A^d}` is closed under the Hadamard product, for
/// any symmetric rational `A`.
pub fn span_is_hadamard_closed(a: &RationalMatrix) -> Result<bool> {
    Ok(reduce_powers(a)?.is_ok())
}

/// Builds the standard basis of a connected regular graph's adjacency
/// algebra, or a witness that the algebra is not Hadamard-closed.
pub fn standard_basis(g: &Graph) -> Result<BasisOutcome> {
    g.require_regular_connected()?;
    let a = g.adjacency();
    let n = g.n();
    let reduced = match reduce_powers(a)? {
        Ok(r) => r,
        Err(failure) => return Ok(BasisOutcome::NotClosed(failure)),
    };
    let ReducedPowers {
        matrices,
        polynomials,
        pivots,
    } = reduced;

    let identity = RationalMatrix::identity(n);
    let identity_index = matrices
        .iter()
        .position(|f| *f == identity)
        .ok_or_else(|| Error::Invariant("no basis element equals I".into()))?;
    let total = matrices
        .iter()
        .try_fold(RationalMatrix::zeros(n, n), |acc, f| acc.add(f))?;
    if total != RationalMatrix::ones(n) {
        return Err(Error::Invariant("basis does not sum to J".into()));
    }
    if let Some(i) = matrices.iter().position(|f| !f.is_symmetric()) {
        return Err(Error::Invariant(format!("F_{i} is not symmetric")));
    }

    let mut basis = StandardBasis {
        matrices,
        identity_index,
        intersection_numbers: Vec::new(),
        polynomials,
        adjacency: a.clone(),
        pivots,
    };
    let size = basis.len();
    let mut p = vec![vec![vec![Rational::zero(); size]; size]; size];
    for i in 0..size {
        for j in i..size {
            let product = mat_mul(&basis.matrices[i], &basis.matrices[j])?;
            let coords = basis.coordinates(&product).ok_or_else(|| {
                Error::Invariant(format!("F_{i} F_{j} left the algebra"))
            })?;
            for (h, value) in coords.into_iter().enumerate() {
                p[h][i][j] = value.clone();
                p[h][j][i] = value;
            }
        }
    }
    basis.intersection_numbers = p;
    Ok(BasisOutcome::Closed(basis))
}

pub fn is_hadamard_closed(g: &Graph) -> Result<bool> {
    Ok(standard_basis(g)?.is_closed())
}

/// Least `i <= d` such that `A^i` has more than `d + 1` distinct entries.
/// Such an `i` certifies that the algebra is not Hadamard-closed.
pub fn distinct_entries_reject(g: &Graph) -> Result<Option<usize>> {
    g.require_connected()?;
    let a = g.adjacency();
    let d_plus_1 = count_distinct_eigenvalues(a)?;
    let mut power = RationalMatrix::identity(g.n());
    for i in 0..d_plus_1 {
        if i > 0 {
            power = mat_mul(&power, a)?;
        }
        if power.distinct_entry_count() > d_plus_1 {
            return Ok(Some(i));
        }
    }
    Ok(None)
}

/// Whether `F_i` alone generates the algebra, i.e. has `d + 1` distinct
/// eigenvalues.
pub fn idempotent_generates(basis: &StandardBasis, i: usize) -> Result<bool> {
    let f = basis
        .matrices
        .get(i)
        .ok_or_else(|| Error::InvalidArgument(format!("no basis element {i}")))?;
    Ok(count_distinct_eigenvalues(f)? == basis.len())
}

/// Rank of `{I, F_i, ..., F_i^d}`; equals `d + 1` exactly when
/// [`idempotent_generates`] holds.
pub fn idempotent_krylov_rank(basis: &StandardBasis, i: usize) -> Result<usize> {
    let f = basis
        .matrices
        .get(i)
        .ok_or_else(|| Error::InvalidArgument(format!("no basis element {i}")))?;
    krylov_rank(f, basis.d())
}

/// Vertex partitions `P_i(x) = {z : (F_i)_{xz} = 1}` induced by the basis,
/// with the parameters `c_ij` from `A F_i = sum_h c_ih F_h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisPartitions {
    /// `cells[x][i] = P_i(x)`, sorted.
    pub cells: Vec<Vec<Vec<usize>>>,
    /// `params[i][j] = c_ij`: every `y` in `P_j(x)` has exactly `c_ij`
    /// neighbours in `P_i(x)`.
    pub params: Vec<Vec<usize>>,
    /// `|P_i(x)|`, the same for every `x`.
    pub sizes: Vec<usize>,
}

pub fn vertex_partitions(basis: &StandardBasis) -> Result<BasisPartitions> {
    let a = basis.adjacency();
    let n = a.rows();
    let size = basis.len();
    let mut params = vec![vec![0usize; size]; size];
    for (i, f) in basis.matrices.iter().enumerate() {
        let product = mat_mul(a, f)?;
        let coords = basis
            .coordinates(&product)
            .ok_or_else(|| Error::Invariant(format!("A F_{i} left the algebra")))?;
        for (h, c) in coords.iter().enumerate() {
            params[i][h] = c
                .is_integer()
                .then(|| c.to_integer().to_usize())
                .flatten()
                .ok_or_else(|| Error::Invariant(format!("c_{i}{h} = {c} is not a count")))?;
        }
    }
    let cells: Vec<Vec<Vec<usize>>> = (0..n)
        .map(|x| {
            basis
                .matrices
                .iter()
                .map(|f| (0..n).filter(|&z| f.get(x, z).is_one()).collect())
                .collect()
        })
        .collect();
    let sizes: Vec<usize> = cells[0].iter().map(Vec::len).collect();

    let mut cell_of = vec![0usize; n];
    for (x, partition) in cells.iter().enumerate() {
        let row_sizes: Vec<usize> = partition.iter().map(Vec::len).collect();
        if row_sizes != sizes {
            return Err(Error::Invariant(format!("cell sizes differ at vertex {x}")));
        }
        for (i, cell) in partition.iter().enumerate() {
            for &z in cell {
                cell_of[z] = i;
            }
        }
        for (j, cell) in partition.iter().enumerate() {
            for &y in cell {
                let mut counts = vec![0usize; size];
                for z in (0..n).filter(|&z| a.get(y, z).is_one()) {
                    counts[cell_of[z]] += 1;
                }
                for (i, &count) in counts.iter().enumerate() {
                    if count != params[i][j] {
                        return Err(Error::Invariant(format!(
                            "partition around {x} is not equitable at vertex {y}"
                        )));
                    }
                }
            }
        }
    }
    Ok(BasisPartitions {
        cells,
        params,
        sizes,
    })
}
