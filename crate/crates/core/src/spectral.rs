//! Distinct-eigenvalue counting by exact Gram–Schmidt, predistance
//! matrices, the Hoffman polynomial and the distance-regularity test.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::{distance_data, DistanceData, Graph};
use crate::linalg::{
    mat_mul, poly_eval_matrix, rref_with_transform, trace_inner, Polynomial, Rational,
    RationalMatrix, Rref,
};

/// Mutually orthogonal matrices `A_0 = I, A_1, ..., A_d` under
/// `<X, Y> = trace(XY) / n`, with `A_i` a degree-`i` polynomial in `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrthogonalSequence {
    pub matrices: Vec<RationalMatrix>,
    /// True when each `A_i` has been scaled so that `||A_i||^2 = <A_i, J>`.
    pub normalized: bool,
}

impl OrthogonalSequence {
    /// Number of nonzero matrices, i.e. the number of distinct eigenvalues.
    pub fn d_plus_1(&self) -> usize {
        self.matrices.len()
    }
}

fn require_symmetric(a: &RationalMatrix) -> Result<()> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    if !a.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    Ok(())
}

/// One step of the three-term recurrence:
/// `A_{k+1} = A_k A - sum_{i in {k-1, k}} <A_k A, A_i> / ||A_i||^2 * A_i`.
fn next_orthogonal(
    a: &RationalMatrix,
    previous: &RationalMatrix,
    current: &RationalMatrix,
) -> Result<RationalMatrix> {
    let shifted = mat_mul(current, a)?;
    let mut next = shifted.clone();
    for basis in [previous, current] {
        let coefficient = trace_inner(&shifted, basis)? / trace_inner(basis, basis)?;
        next = next.add_scaled(&-coefficient, basis)?;
    }
    Ok(next)
}

/// Gram–Schmidt on `I, A, A^2, ...`, stopping at the first zero matrix.
///
/// The first step projects out the identity, so inputs with nonzero trace
/// are handled; for adjacency matrices it leaves `A_1 = A`.
pub fn orthogonal_sequence(a: &RationalMatrix) -> Result<OrthogonalSequence> {
    require_symmetric(a)?;
    let n = a.rows();
    if n == 0 {
        return Ok(OrthogonalSequence {
            matrices: Vec::new(),
            normalized: false,
        });
    }
    let identity = RationalMatrix::identity(n);
    let first = a.add_scaled(&-trace_inner(a, &identity)?, &identity)?;
    let mut matrices = vec![identity];
    if first.is_zero() {
        return Ok(OrthogonalSequence {
            matrices,
            normalized: false,
        });
    }
    matrices.push(first);
    loop {
        let k = matrices.len() - 1;
        let next = next_orthogonal(a, &matrices[k - 1], &matrices[k])?;
        if next.is_zero() {
            break;
        }
        matrices.push(next);
    }
    Ok(OrthogonalSequence {
        matrices,
        normalized: false,
    })
}

/// Number of distinct eigenvalues of a symmetric rational matrix, without
/// computing any eigenvalue. Integral input takes the integer-only path.
pub fn count_distinct_eigenvalues(a: &RationalMatrix) -> Result<usize> {
    if a.is_integral() {
        count_distinct_eigenvalues_integral(a)
    } else {
        Ok(orthogonal_sequence(a)?.d_plus_1())
    }
}

/// Integer-only variant of [`count_distinct_eigenvalues`].
///
/// Uses the un-normalized inner product `trace(XY)` and clears
/// denominators at every step, so no rational number is ever formed.
/// Requires an integral symmetric matrix.
pub fn count_distinct_eigenvalues_integral(a: &RationalMatrix) -> Result<usize> {
    require_symmetric(a)?;
    let n = a.rows();
    if n == 0 {
        return Ok(0);
    }
    let a = IntMatrix::from_rational(a).ok_or_else(|| {
        Error::InvalidArgument("integer-only eigenvalue count needs integral entries".into())
    })?;
    let identity = IntMatrix::identity(n);
    // n * A - trace(A) * I is orthogonal to I.
    let first = a
        .scale(&BigInt::from(n))
        .add_scaled(&-a.trace(), &identity)
        .primitive();
    if first.is_zero() {
        return Ok(1);
    }
    let mut previous = identity;
    let mut current = first;
    let mut count = 2;
    loop {
        let shifted = current.mul(&a);
        let norm_prev = previous.trace_product(&previous);
        let norm_cur = current.trace_product(&current);
        let common = norm_prev.lcm(&norm_cur);
        let mut next = shifted.scale(&common);
        for (basis, norm) in [(&previous, &norm_prev), (&current, &norm_cur)] {
            let coefficient = shifted.trace_product(basis) * (&common / norm);
            next = next.add_scaled(&-coefficient, basis);
        }
        let next = next.primitive();
        if next.is_zero() {
            return Ok(count);
        }
        count += 1;
        previous = std::mem::replace(&mut current, next);
    }
}

/// Dense integer matrix used only by the integer-only eigenvalue count.
#[derive(Clone, Debug)]
struct IntMatrix {
    n: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    fn from_rational(m: &RationalMatrix) -> Option<Self> {
        Some(Self {
            n: m.rows(),
            entries: m.to_integers()?,
        })
    }

    fn identity(n: usize) -> Self {
        let mut entries = vec![BigInt::zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = BigInt::one();
        }
        Self { n, entries }
    }

    fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    fn trace(&self) -> BigInt {
        (0..self.n).map(|i| &self.entries[i * self.n + i]).sum()
    }

    fn trace_product(&self, other: &Self) -> BigInt {
        let n = self.n;
        let mut acc = BigInt::zero();
        for i in 0..n {
            for j in 0..n {
                let x = &self.entries[i * n + j];
                if !x.is_zero() {
                    acc += x * &other.entries[j * n + i];
                }
            }
        }
        acc
    }

    fn scale(&self, factor: &BigInt) -> Self {
        Self {
            n: self.n,
            entries: self.entries.iter().map(|x| x * factor).collect(),
        }
    }

    fn add_scaled(&self, factor: &BigInt, other: &Self) -> Self {
        Self {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(x, y)| x + y * factor)
                .collect(),
        }
    }

    fn mul(&self, other: &Self) -> Self {
        let n = self.n;
        let mut entries = vec![BigInt::zero(); n * n];
        for r in 0..n {
            for k in 0..n {
                let x = &self.entries[r * n + k];
                if x.is_zero() {
                    continue;
                }
                for c in 0..n {
                    let y = &other.entries[k * n + c];
                    if !y.is_zero() {
                        entries[r * n + c] += x * y;
                    }
                }
            }
        }
        Self { n, entries }
    }

    /// Divides out the gcd of all entries.
    fn primitive(self) -> Self {
        let content = self
            .entries
            .iter()
            .fold(BigInt::zero(), |acc, x| acc.gcd(x));
        if content.is_zero() || content.is_one() {
            return self;
        }
        Self {
            n: self.n,
            entries: self.entries.iter().map(|x| x / &content).collect(),
        }
    }
}

/// Scales `m` so that `||m||^2 = <m, J>`.
fn normalize_to_ones(m: &RationalMatrix) -> Result<RationalMatrix> {
    let norm = trace_inner(m, m)?;
    let against_ones = m.entry_sum() / Rational::from_integer(BigInt::from(m.rows()));
    Ok(m.scale(&(against_ones / norm)))
}

/// Predistance matrices of a connected regular graph: the orthogonal
/// sequence for `A`, each scaled so that `||A_i||^2 = <A_i, J>`. They sum to `J`.
pub fn predistance_sequence(g: &Graph) -> Result<OrthogonalSequence> {
    g.require_regular_connected()?;
    let raw = orthogonal_sequence(g.adjacency())?;
    let matrices = raw
        .matrices
        .iter()
        .map(normalize_to_ones)
        .collect::<Result<Vec<_>>>()?;
    Ok(OrthogonalSequence {
        matrices,
        normalized: true,
    })
}

/// `I, A, ..., A^d`.
pub(crate) fn powers(a: &RationalMatrix, d: usize) -> Result<Vec<RationalMatrix>> {
    let mut out = vec![RationalMatrix::identity(a.rows())];
    for _ in 0..d {
        let next = mat_mul(out.last().expect("nonempty"), a)?;
        out.push(next);
    }
    Ok(out)
}

/// RREF of the matrix whose rows are the row-major vectorizations of the
/// given square matrices.
pub(crate) fn vectorized_rref(matrices: &[RationalMatrix]) -> Rref {
    let width = matrices.first().map_or(0, |m| m.rows() * m.cols());
    let entries: Vec<Rational> = matrices.iter().flat_map(|m| m.vectorize()).collect();
    let stacked = RationalMatrix::new(matrices.len(), width, entries).expect("uniform shapes");
    rref_with_transform(&stacked)
}

/// Row `i` of an RREF transform read as polynomial coefficients.
pub(crate) fn transform_row_polynomial(rref: &Rref, row: usize) -> Polynomial {
    Polynomial::new(rref.transform.row(row).to_vec())
}

/// Rank of the vectorized Krylov family `{I, F, ..., F^d}`.
pub fn krylov_rank(f: &RationalMatrix, d: usize) -> Result<usize> {
    Ok(vectorized_rref(&powers(f, d)?).rank)
}

/// The polynomial `H` with `H(A) = J`; present exactly for connected
/// regular graphs.
pub fn hoffman_polynomial(g: &Graph) -> Option<Polynomial> {
    g.require_regular_connected().ok()?;
    let a = g.adjacency();
    let d = count_distinct_eigenvalues(a).ok()?.checked_sub(1)?;
    let rref = vectorized_rref(&powers(a, d).ok()?);
    let ones = RationalMatrix::ones(g.n());
    let coords = rref.coordinates(&ones.vectorize())?;
    let h = coords
        .iter()
        .enumerate()
        .fold(Polynomial::zero(), |acc, (row, c)| {
            acc.add(&transform_row_polynomial(&rref, row).scale(c))
        });
    (poly_eval_matrix(&h, a).ok()? == ones).then_some(h)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionArray {
    /// `b_0, ..., b_{D-1}`
    pub b: Vec<usize>,
    /// `c_1, ..., c_D`
    pub c: Vec<usize>,
}

impl fmt::Display for IntersectionArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| {
            v.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "{{{};{}}}", join(&self.b), join(&self.c))
    }
}

/// Why the distance-regularity test stopped. Indices refer to the
/// predistance matrix `A_k` being examined.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DrgReason {
    NotRegular,
    NonBinaryMatrix(usize),
    ZeroBeforeDiameter(usize),
    Success,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DrgVerdict {
    pub is_drg: bool,
    pub reason: DrgReason,
    pub intersection_array: Option<IntersectionArray>,
}

impl DrgVerdict {
    fn fail(reason: DrgReason) -> Self {
        Self {
            is_drg: false,
            reason,
            intersection_array: None,
        }
    }
}

/// Decides distance-regularity from the normalized predistance recurrence.
pub fn is_distance_regular(g: &Graph) -> Result<DrgVerdict> {
    is_distance_regular_with(g, true)
}

/// As [`is_distance_regular`]. With `normalize == false` each new matrix
/// is only required to have all nonzero entries equal to some `c`, and is
/// then divided by `c`; the verdict is the same either way.
pub fn is_distance_regular_with(g: &Graph, normalize: bool) -> Result<DrgVerdict> {
    let dd = distance_data(g)?;
    if g.is_regular().is_none() {
        return Ok(DrgVerdict::fail(DrgReason::NotRegular));
    }
    let a = g.adjacency();
    let diameter = dd.diameter;
    if a.is_zero() {
        // Single vertex.
        return success(&dd);
    }
    let mut previous = RationalMatrix::identity(g.n());
    let mut current = a.clone();
    let mut k = 1;
    loop {
        let raw = next_orthogonal(a, &previous, &current)?;
        let next = if raw.is_zero() {
            raw
        } else if normalize {
            normalize_to_ones(&raw)?
        } else {
            match uniform_nonzero_value(&raw) {
                Some(c) => raw.scale(&c.recip()),
                None => return Ok(DrgVerdict::fail(DrgReason::NonBinaryMatrix(k + 1))),
            }
        };
        if !next.is_binary() {
            return Ok(DrgVerdict::fail(DrgReason::NonBinaryMatrix(k + 1)));
        }
        if next.is_zero() {
            return match k.cmp(&diameter) {
                std::cmp::Ordering::Less => {
                    Ok(DrgVerdict::fail(DrgReason::ZeroBeforeDiameter(k + 1)))
                }
                std::cmp::Ordering::Equal => success(&dd),
                std::cmp::Ordering::Greater => Err(Error::Invariant(format!(
                    "nonzero 0-1 predistance matrix A_{k} beyond diameter {diameter}"
                ))),
            };
        }
        previous = std::mem::replace(&mut current, next);
        k += 1;
    }
}

fn uniform_nonzero_value(m: &RationalMatrix) -> Option<Rational> {
    let mut nonzero = m.entries().iter().filter(|x| !x.is_zero());
    let first = nonzero.next()?;
    nonzero.all(|x| x == first).then(|| first.clone())
}

fn success(dd: &DistanceData) -> Result<DrgVerdict> {
    let array = intersection_array(dd)?;
    Ok(DrgVerdict {
        is_drg: true,
        reason: DrgReason::Success,
        intersection_array: Some(array),
    })
}

/// Reads `b_i, c_i` around vertex 0 and checks them at every ordered pair.
fn intersection_array(dd: &DistanceData) -> Result<IntersectionArray> {
    let n = dd.dist.len();
    let diameter = dd.diameter;
    let adjacency_of = |y: usize| (0..n).filter(move |&z| dd.dist[y][z] == 1);
    let counts = |x: usize, y: usize| {
        let i = dd.dist[x][y];
        let mut back = 0;
        let mut ahead = 0;
        for z in adjacency_of(y) {
            let dz = dd.dist[x][z];
            if dz + 1 == i {
                back += 1;
            } else if dz == i + 1 {
                ahead += 1;
            }
        }
        (back, ahead)
    };
    let mut c = vec![0; diameter + 1];
    let mut b = vec![0; diameter + 1];
    let mut seen = vec![false; diameter + 1];
    for y in 0..n {
        let i = dd.dist[0][y];
        if !seen[i] {
            seen[i] = true;
            (c[i], b[i]) = counts(0, y);
        }
    }
    for x in 0..n {
        for y in 0..n {
            let i = dd.dist[x][y];
            if counts(x, y) != (c[i], b[i]) {
                return Err(Error::Invariant(format!(
                    "distance partition not equitable at ({x},{y}) although the predistance test succeeded"
                )));
            }
        }
    }
    Ok(IntersectionArray {
        b: b[..diameter].to_vec(),
        c: c[1..].to_vec(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{
        chordal_ring_12_4, circulant, complete, cycle, kronecker, path, petersen, triangular,
    };
    use crate::linalg::{int, rat};

    #[test]
    fn identity_has_one_eigenvalue() {
        assert_eq!(
            count_distinct_eigenvalues(&RationalMatrix::identity(5)).unwrap(),
            1
        );
        assert_eq!(
            count_distinct_eigenvalues(&RationalMatrix::identity(5).scale(&int(3))).unwrap(),
            1
        );
        assert_eq!(count_distinct_eigenvalues(&RationalMatrix::zeros(3, 3)).unwrap(), 1);
    }

    #[test]
    fn small_counts() {
        assert_eq!(count_distinct_eigenvalues(complete(4).adjacency()).unwrap(), 2);
        let g = kronecker(&complete(2), &triangular(4));
        assert_eq!(count_distinct_eigenvalues(g.adjacency()).unwrap(), 5);
        assert_eq!(
            count_distinct_eigenvalues(chordal_ring_12_4().adjacency()).unwrap(),
            7
        );
        assert_eq!(count_distinct_eigenvalues(triangular(4).adjacency()).unwrap(), 3);
    }

    #[test]
    fn non_symmetric_is_rejected() {
        let m = RationalMatrix::from_i64_rows(&[vec![0, 1], vec![0, 0]]);
        assert_eq!(count_distinct_eigenvalues(&m), Err(Error::NotSymmetric));
        assert!(count_distinct_eigenvalues(&RationalMatrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn integer_path_matches_rational_path() {
        let diag = RationalMatrix::from_i64_rows(&[vec![2, 0, 0], vec![0, 2, 0], vec![0, 0, -1]]);
        for m in [
            diag,
            RationalMatrix::identity(4),
            petersen().adjacency().clone(),
            chordal_ring_12_4().adjacency().clone(),
            path(6).adjacency().clone(),
        ] {
            assert_eq!(
                count_distinct_eigenvalues_integral(&m).unwrap(),
                count_distinct_eigenvalues(&m).unwrap()
            );
        }
        let frac = RationalMatrix::identity(2).scale(&rat(1, 2));
        assert!(count_distinct_eigenvalues_integral(&frac).is_err());
    }

    #[test]
    fn hexagon_predistance_is_distance() {
        let g = cycle(6);
        let seq = predistance_sequence(&g).unwrap();
        assert!(seq.normalized);
        assert_eq!(seq.matrices, distance_data(&g).unwrap().matrices);
    }

    #[test]
    fn predistance_of_kronecker_sums_to_j() {
        let g = kronecker(&complete(2), &triangular(4));
        let seq = predistance_sequence(&g).unwrap();
        assert_eq!(seq.d_plus_1(), 5);
        let sum = seq
            .matrices
            .iter()
            .fold(RationalMatrix::zeros(12, 12), |acc, m| acc.add(m).unwrap());
        assert_eq!(sum, RationalMatrix::ones(12));
        assert!(seq.matrices.iter().any(|m| !m.is_binary()));
    }

    #[test]
    fn predistance_requires_regular() {
        assert_eq!(predistance_sequence(&path(3)), Err(Error::NotRegular));
    }

    #[test]
    fn hoffman_examples() {
        for n in 2..6 {
            assert_eq!(hoffman_polynomial(&complete(n)), Some(Polynomial::from_i64(&[1, 1])));
        }
        assert_eq!(hoffman_polynomial(&path(3)), None);
        let two_triangles =
            Graph::from_edge_list(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_eq!(hoffman_polynomial(&two_triangles), None);
    }

    #[test]
    fn drg_examples() {
        let v = is_distance_regular(&petersen()).unwrap();
        assert!(v.is_drg);
        assert_eq!(v.intersection_array.unwrap().to_string(), "{3,2;1,1}");
        let v = is_distance_regular(&cycle(6)).unwrap();
        assert_eq!(v.intersection_array.unwrap().to_string(), "{2,1,1;1,1,2}");
        let v = is_distance_regular(&kronecker(&complete(2), &triangular(4))).unwrap();
        assert!(!v.is_drg);
        assert!(matches!(
            v.reason,
            DrgReason::NonBinaryMatrix(_) | DrgReason::ZeroBeforeDiameter(_)
        ));
        assert!(!is_distance_regular(&chordal_ring_12_4()).unwrap().is_drg);
        assert_eq!(
            is_distance_regular(&path(3)).unwrap().reason,
            DrgReason::NotRegular
        );
        let k1 = complete(1);
        assert!(is_distance_regular(&k1).unwrap().is_drg);
    }

    #[test]
    fn unnormalized_variant_agrees() {
        for g in [
            petersen(),
            cycle(7),
            complete(5),
            chordal_ring_12_4(),
            kronecker(&complete(2), &triangular(4)),
            circulant(7, &[1, 2]).unwrap(),
            triangular(5),
        ] {
            assert_eq!(
                is_distance_regular_with(&g, false).unwrap(),
                is_distance_regular(&g).unwrap()
            );
        }
    }
}
