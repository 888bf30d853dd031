//! Equitable partitions, intersection diagrams and the results built on them.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::algebra::is_hadamard_closed;
use crate::error::{Error, Result};
use crate::graph::{distance_data, Graph};
use crate::linalg::{rank, Rational, RationalMatrix};
use crate::spectral::count_distinct_eigenvalues;
use crate::walkpart::{walk_partition, WalkPartition};

/// A vertex partition with `quotient[i][j] = |Γ(v) ∩ cells[j]|` for every
/// `v` in `cells[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquitablePartition {
    pub cells: Vec<Vec<usize>>,
    pub quotient: Vec<Vec<usize>>,
}

/// A vertex whose neighbour count into some cell differs from the first
/// vertex of its own cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquitableViolation {
    pub vertex: usize,
    pub cell: usize,
    pub target: usize,
    pub expected: usize,
    pub found: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Equitability {
    Equitable(EquitablePartition),
    NotEquitable(EquitableViolation),
}

impl Equitability {
    pub fn partition(self) -> Option<EquitablePartition> {
        match self {
            Self::Equitable(p) => Some(p),
            Self::NotEquitable(_) => None,
        }
    }
}

pub fn verify_equitable(g: &Graph, cells: &[Vec<usize>]) -> Result<Equitability> {
    let n = g.n();
    let mut cell_of = vec![usize::MAX; n];
    for (i, cell) in cells.iter().enumerate() {
        if cell.is_empty() {
            return Err(Error::NotAPartition(format!("cell {i} is empty")));
        }
        for &v in cell {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if cell_of[v] != usize::MAX {
                return Err(Error::NotAPartition(format!("vertex {v} appears twice")));
            }
            cell_of[v] = i;
        }
    }
    if let Some(v) = cell_of.iter().position(|&c| c == usize::MAX) {
        return Err(Error::NotAPartition(format!("vertex {v} is in no cell")));
    }
    let counts = |v: usize| {
        let mut row = vec![0usize; cells.len()];
        for &u in g.neighbors(v) {
            row[cell_of[u]] += 1;
        }
        row
    };
    let mut quotient = Vec::with_capacity(cells.len());
    for (i, cell) in cells.iter().enumerate() {
        let expected = counts(cell[0]);
        for &v in &cell[1..] {
            let found = counts(v);
            if let Some(j) = (0..cells.len()).find(|&j| found[j] != expected[j]) {
                return Ok(Equitability::NotEquitable(EquitableViolation {
                    vertex: v,
                    cell: i,
                    target: j,
                    expected: expected[j],
                    found: found[j],
                }));
            }
        }
        quotient.push(expected);
    }
    Ok(Equitability::Equitable(EquitablePartition {
        cells: cells.to_vec(),
        quotient,
    }))
}

impl EquitablePartition {
    /// Entry `j` is the number of `ell`-walks from any vertex of cell `j`
    /// into cell `base`, computed from the quotient matrix alone as
    /// `(B^ell)[j][base]`.
    pub fn walk_counts(&self, base: usize, ell: usize) -> Vec<BigInt> {
        self.walk_count_table(base, ell).pop().expect("nonempty")
    }

    /// Rows `0..=max_ell` of [`Self::walk_counts`].
    pub fn walk_count_table(&self, base: usize, max_ell: usize) -> Vec<Vec<BigInt>> {
        let k = self.cells.len();
        let mut current: Vec<BigInt> = (0..k)
            .map(|j| if j == base { BigInt::one() } else { BigInt::zero() })
            .collect();
        let mut out = vec![current.clone()];
        for _ in 0..max_ell {
            current = (0..k)
                .map(|i| {
                    self.quotient[i]
                        .iter()
                        .zip(&current)
                        .map(|(&b, c)| c * BigInt::from(b))
                        .sum()
                })
                .collect();
            out.push(current.clone());
        }
        out
    }
}

pub fn quotient_walk_counts(partition: &EquitablePartition, base: usize, ell: usize) -> Vec<BigInt> {
    partition.walk_counts(base, ell)
}

/// Intersection diagram around a vertex with cells put in canonical order:
/// distance from the root, then cell size, then the walk counts to the root
/// for lengths `0..k` where `k` is the number of cells.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiagramSignature {
    pub distances: Vec<usize>,
    pub sizes: Vec<usize>,
    pub quotient: Vec<Vec<usize>>,
}

impl DiagramSignature {
    /// `root` must be the only vertex of its cell.
    pub fn new(g: &Graph, partition: &EquitablePartition, root: usize) -> Result<Self> {
        let base = partition
            .cells
            .iter()
            .position(|c| c == &[root])
            .ok_or_else(|| Error::InvalidArgument(format!("{{{root}}} is not a cell")))?;
        let dist = g.bfs(root);
        let k = partition.cells.len();
        let table = partition.walk_count_table(base, k.saturating_sub(1));
        let key = |j: usize| {
            let distance = partition.cells[j]
                .iter()
                .filter_map(|&v| dist[v])
                .min()
                .unwrap_or(usize::MAX);
            let walks: Vec<&BigInt> = table.iter().map(|row| &row[j]).collect();
            (distance, partition.cells[j].len(), walks, j)
        };
        let mut order: Vec<usize> = (0..k).collect();
        order.sort_by_cached_key(|&j| key(j));
        Ok(Self {
            distances: order.iter().map(|&j| key(j).0).collect(),
            sizes: order.iter().map(|&j| partition.cells[j].len()).collect(),
            quotient: order
                .iter()
                .map(|&i| order.iter().map(|&j| partition.quotient[i][j]).collect())
                .collect(),
        })
    }
}

pub const FAITHFUL_CONSTRUCTION: &str =
    "cells around x are the classes of pairs (x, z) with equal walk vectors over lengths 0..d";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaithfulDiagramReport {
    /// Whether every vertex has an equitable walk-vector diagram and all of
    /// them share one signature.
    pub common: bool,
    /// Number of walk-regular classes.
    pub r_plus_1: usize,
    /// `P[l][j] = w_lj`, the number of `l`-walks from cell `j` to the root,
    /// for `l = 0..r`. Present when the diagram is common.
    pub p: Option<RationalMatrix>,
    pub rank_p: Option<usize>,
    /// `Some(true)` when `rank(P) = r + 1`; nothing can be concluded otherwise.
    pub concluded_qp: Option<bool>,
    pub signature: Option<DiagramSignature>,
    /// The diagram around vertex 0, cells in class order.
    pub diagram: Option<EquitablePartition>,
    pub construction: &'static str,
}

/// Cells around `x` indexed by walk-regular class, in class order.
fn walk_vector_cells(wp: &WalkPartition, x: usize) -> Vec<Vec<usize>> {
    let present: BTreeSet<usize> = wp.class_of[x].iter().copied().collect();
    present
        .into_iter()
        .map(|c| (0..wp.n()).filter(|&z| wp.class_of[x][z] == c).collect())
        .collect()
}

pub fn faithful_diagram_analysis(g: &Graph) -> Result<FaithfulDiagramReport> {
    let wp = walk_partition(g)?;
    let r_plus_1 = wp.classes.len();
    let per_vertex: Vec<Option<(EquitablePartition, DiagramSignature)>> = (0..g.n())
        .into_par_iter()
        .map(|x| -> Result<_> {
            let cells = walk_vector_cells(&wp, x);
            match verify_equitable(g, &cells)? {
                Equitability::Equitable(p) => {
                    let sig = DiagramSignature::new(g, &p, x)?;
                    Ok(Some((p, sig)))
                }
                Equitability::NotEquitable(_) => Ok(None),
            }
        })
        .collect::<Result<_>>()?;

    let common = match per_vertex.first() {
        Some(Some((_, first))) => per_vertex
            .iter()
            .all(|entry| entry.as_ref().is_some_and(|(_, s)| s == first)),
        _ => false,
    };
    let mut report = FaithfulDiagramReport {
        common,
        r_plus_1,
        p: None,
        rank_p: None,
        concluded_qp: None,
        signature: None,
        diagram: None,
        construction: FAITHFUL_CONSTRUCTION,
    };
    if !common {
        return Ok(report);
    }
    let (partition, signature) = per_vertex
        .into_iter()
        .next()
        .flatten()
        .expect("common diagram exists");
    if partition.cells.len() != r_plus_1 {
        return Err(Error::Invariant(format!(
            "common diagram has {} cells but there are {r_plus_1} classes",
            partition.cells.len()
        )));
    }
    let base = partition
        .cells
        .iter()
        .position(|c| c == &[0])
        .ok_or_else(|| Error::Invariant("root is not a singleton cell".into()))?;
    let table = partition.walk_count_table(base, r_plus_1 - 1);
    let p = RationalMatrix::from_fn(r_plus_1, r_plus_1, |l, j| {
        Rational::from_integer(table[l][j].clone())
    });
    let rank_p = rank(&p);
    let d_plus_1 = count_distinct_eigenvalues(g.adjacency())?;
    if rank_p != d_plus_1 {
        return Err(Error::Invariant(format!(
            "rank(P) = {rank_p} but A has {d_plus_1} distinct eigenvalues"
        )));
    }
    report.concluded_qp = (rank_p == r_plus_1).then_some(true);
    report.p = Some(p);
    report.rank_p = Some(rank_p);
    report.signature = Some(signature);
    report.diagram = Some(partition);
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FourEigenvalueClass {
    /// Non-adjacent pairs have a constant number of common neighbours and
    /// adjacent pairs exactly two values.
    CaseI,
    /// Adjacent pairs constant, non-adjacent pairs exactly two values.
    CaseII,
    Both,
    Neither,
    /// Not a connected regular graph of diameter 2 with 4 eigenvalues.
    NotApplicable,
}

impl FourEigenvalueClass {
    pub fn is_closed_case(self) -> bool {
        matches!(self, Self::CaseI | Self::CaseII | Self::Both)
    }
}

/// Classifies a connected regular diameter-2 graph with four distinct
/// eigenvalues by its common-neighbour counts. The verdict is checked
/// against the Hadamard-closure test.
pub fn diameter2_four_ev_check(g: &Graph) -> Result<FourEigenvalueClass> {
    if g.n() == 0 || !g.is_connected() || g.is_regular().is_none() {
        return Ok(FourEigenvalueClass::NotApplicable);
    }
    if distance_data(g)?.diameter != 2 || count_distinct_eigenvalues(g.adjacency())? != 4 {
        return Ok(FourEigenvalueClass::NotApplicable);
    }
    let n = g.n();
    let mut adjacent = BTreeSet::new();
    let mut non_adjacent = BTreeSet::new();
    for x in 0..n {
        for y in x + 1..n {
            let common = g
                .neighbors(x)
                .iter()
                .filter(|&&z| g.has_edge(y, z))
                .count();
            if g.has_edge(x, y) {
                adjacent.insert(common);
            } else {
                non_adjacent.insert(common);
            }
        }
    }
    let case_i = non_adjacent.len() == 1 && adjacent.len() == 2;
    let case_ii = adjacent.len() == 1 && non_adjacent.len() == 2;
    let class = match (case_i, case_ii) {
        (true, true) => FourEigenvalueClass::Both,
        (true, false) => FourEigenvalueClass::CaseI,
        (false, true) => FourEigenvalueClass::CaseII,
        (false, false) => FourEigenvalueClass::Neither,
    };
    if class.is_closed_case() != is_hadamard_closed(g)? {
        return Err(Error::Invariant(format!(
            "{class:?} disagrees with the Hadamard-closure test"
        )));
    }
    Ok(class)
}
