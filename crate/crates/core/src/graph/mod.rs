//! Simple undirected graphs on vertices `0..n`.

mod edgelist;
mod generators;

pub use edgelist::{parse_edge_list, write_edge_list};
pub use generators::{
    chordal_ring_12_4, circulant, circulant_connection, complete, cycle, kronecker, path, petersen,
    triangular, CirculantConnection,
};

use std::collections::{BTreeSet, VecDeque};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::{Rational, RationalMatrix};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    neighbors: Vec<Vec<usize>>,
    adjacency: RationalMatrix,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse into one.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut set = BTreeSet::new();
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            set.insert((u.min(v), u.max(v)));
        }
        let edges: Vec<(usize, usize)> = set.into_iter().collect();
        let mut neighbors = vec![Vec::new(); n];
        let mut adjacency = RationalMatrix::zeros(n, n);
        for &(u, v) in &edges {
            neighbors[u].push(v);
            neighbors[v].push(u);
            adjacency.set(u, v, Rational::one());
            adjacency.set(v, u, Rational::one());
        }
        for list in &mut neighbors {
            list.sort_unstable();
        }
        Ok(Self {
            n,
            edges,
            neighbors,
            adjacency,
        })
    }

    /// Builds a graph from a symmetric 0-1 matrix with zero diagonal.
    pub fn from_adjacency(adjacency: &RationalMatrix) -> Result<Self> {
        if !adjacency.is_square() {
            return Err(Error::NotSquare {
                rows: adjacency.rows(),
                cols: adjacency.cols(),
            });
        }
        if !adjacency.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        if let Some((r, c, v)) = adjacency.first_non_binary() {
            return Err(Error::InvalidArgument(format!(
                "adjacency entry ({r},{c}) = {v} is not 0 or 1"
            )));
        }
        let n = adjacency.rows();
        let mut edges = Vec::new();
        for u in 0..n {
            if !adjacency.get(u, u).is_zero() {
                return Err(Error::SelfLoop(u));
            }
            edges.extend((u + 1..n).filter(|&v| adjacency.get(u, v).is_one()).map(|v| (u, v)));
        }
        Self::from_edge_list(n, &edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    pub fn adjacency(&self) -> &RationalMatrix {
        &self.adjacency
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.neighbors[u].binary_search(&v).is_ok()
    }

    /// Valency `k` if every vertex has degree `k`.
    pub fn is_regular(&self) -> Option<usize> {
        let k = self.neighbors.first().map_or(0, Vec::len);
        self.neighbors.iter().all(|l| l.len() == k).then_some(k)
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.bfs(0).iter().all(Option::is_some)
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp: Vec<usize> = self
                .bfs(start)
                .iter()
                .enumerate()
                .filter_map(|(v, d)| d.map(|_| v))
                .collect();
            comp.sort_unstable();
            for &v in &comp {
                seen[v] = true;
            }
            out.push(comp);
        }
        out
    }

    /// Hop distances from `source`; `None` for unreachable vertices.
    pub fn bfs(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].expect("queued vertices are reached");
            for &v in &self.neighbors[u] {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn complement(&self) -> Self {
        let mut edges = Vec::new();
        for u in 0..self.n {
            edges.extend((u + 1..self.n).filter(|&v| !self.has_edge(u, v)).map(|v| (u, v)));
        }
        Self::from_edge_list(self.n, &edges).expect("complement of a simple graph is simple")
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected {
                components: self.components(),
            })
        }
    }

    pub(crate) fn require_regular_connected(&self) -> Result<usize> {
        self.require_connected()?;
        self.is_regular().ok_or(Error::NotRegular)
    }
}

/// All-pairs hop distances and the distance matrices `A_0..A_D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceData {
    pub dist: Vec<Vec<usize>>,
    pub diameter: usize,
    pub matrices: Vec<RationalMatrix>,
}

impl DistanceData {
    pub fn distance(&self, x: usize, y: usize) -> usize {
        self.dist[x][y]
    }
}

/// BFS from every vertex. Fails on a disconnected graph.
pub fn distance_data(g: &Graph) -> Result<DistanceData> {
    g.require_connected()?;
    let n = g.n();
    let dist: Vec<Vec<usize>> = (0..n)
        .into_par_iter()
        .map(|s| g.bfs(s).into_iter().map(|d| d.expect("connected")).collect())
        .collect();
    let diameter = dist.iter().flatten().copied().max().unwrap_or(0);
    let one = Rational::from_integer(BigInt::one());
    let mut matrices = vec![RationalMatrix::zeros(n, n); diameter + 1];
    for (x, row) in dist.iter().enumerate() {
        for (y, &d) in row.iter().enumerate() {
            matrices[d].set(x, y, one.clone());
        }
    }
    Ok(DistanceData {
        dist,
        diameter,
        matrices,
    })
}
