use std::collections::BTreeSet;

use log::debug;

use super::Graph;
use crate::error::{Error, Result};

pub fn complete(n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Graph::from_edge_list(n, &edges).expect("valid edges")
}

/// Cycle `C_n`. Panics if `n < 3`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs at least 3 vertices");
    let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edge_list(n, &edges).expect("valid edges")
}

/// Path `P_n` on `n` vertices.
pub fn path(n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edge_list(n, &edges).expect("valid edges")
}

/// Triangular graph `T_m`, the line graph of `K_m`.
///
/// Vertices are the 2-subsets of `0..m` in lexicographic order; two are
/// adjacent when they share an element. Panics if `m < 2`.
pub fn triangular(m: usize) -> Graph {
    assert!(m >= 2, "triangular graph needs m >= 2");
    let pairs: Vec<(usize, usize)> = (0..m)
        .flat_map(|a| (a + 1..m).map(move |b| (a, b)))
        .collect();
    let mut edges = Vec::new();
    for (i, p) in pairs.iter().enumerate() {
        for (j, q) in pairs.iter().enumerate().skip(i + 1) {
            if p.0 == q.0 || p.0 == q.1 || p.1 == q.0 || p.1 == q.1 {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edge_list(pairs.len(), &edges).expect("valid edges")
}

/// Kronecker (tensor) product: adjacency `A ⊗ A'`, vertex `(a, b)` has
/// index `a * h.n() + b`. The result may be disconnected.
pub fn kronecker(g: &Graph, h: &Graph) -> Graph {
    let m = h.n();
    let mut edges = Vec::new();
    for &(a, b) in g.edges() {
        for &(c, d) in h.edges() {
            edges.push((a * m + c, b * m + d));
            edges.push((a * m + d, b * m + c));
        }
    }
    Graph::from_edge_list(g.n() * m, &edges).expect("valid edges")
}

/// The Petersen graph as Kneser(5,2): 2-subsets of `0..5` in lexicographic
/// order, adjacent when disjoint.
pub fn petersen() -> Graph {
    const EDGES: [(usize, usize); 15] = [
        (0, 7),
        (0, 8),
        (0, 9),
        (1, 5),
        (1, 6),
        (1, 9),
        (2, 4),
        (2, 6),
        (2, 8),
        (3, 4),
        (3, 5),
        (3, 7),
        (4, 9),
        (5, 8),
        (6, 7),
    ];
    Graph::from_edge_list(10, &EDGES).expect("valid edges")
}

/// The cubic "chordal ring (12,4)": the 12-cycle plus chords
/// `{2k, 2k+3 mod 12}` for `k = 0..6`.
pub fn chordal_ring_12_4() -> Graph {
    let mut edges: Vec<(usize, usize)> = (0..12).map(|i| (i, (i + 1) % 12)).collect();
    edges.extend((0..6).map(|k| (2 * k, (2 * k + 3) % 12)));
    Graph::from_edge_list(12, &edges).expect("valid edges")
}

/// A circulant connection set after reduction mod `n` and closure under
/// negation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CirculantConnection {
    pub residues: BTreeSet<usize>,
    /// True when negatives had to be added.
    pub symmetrized: bool,
}

pub fn circulant_connection(n: usize, connection: &[usize]) -> Result<CirculantConnection> {
    if n == 0 {
        return Err(Error::InvalidConnectionSet("n must be positive".into()));
    }
    let given: BTreeSet<usize> = connection.iter().map(|&s| s % n).collect();
    if given.contains(&0) {
        return Err(Error::InvalidConnectionSet(format!(
            "0 (mod {n}) would create loops"
        )));
    }
    let residues: BTreeSet<usize> = given.iter().flat_map(|&s| [s, (n - s) % n]).collect();
    Ok(CirculantConnection {
        symmetrized: residues != given,
        residues,
    })
}

/// Circulant graph on `Z_n`: `i ~ j` iff `(i - j) mod n` is in the
/// connection set. A set that is not closed under negation is symmetrized.
pub fn circulant(n: usize, connection: &[usize]) -> Result<Graph> {
    let conn = circulant_connection(n, connection)?;
    if conn.symmetrized {
        debug!(
            "circulant({n}): connection set symmetrized to {:?}",
            conn.residues
        );
    }
    let mut edges = Vec::new();
    for i in 0..n {
        for &s in &conn.residues {
            edges.push((i, (i + s) % n));
        }
    }
    Graph::from_edge_list(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::distance_data;

    #[test]
    fn circulant_examples() {
        let g = circulant(7, &[1, 2, 5, 6]).unwrap();
        assert_eq!(g.is_regular(), Some(4));
        assert_eq!(distance_data(&g).unwrap().diameter, 2);
        assert_eq!(circulant(6, &[1, 5]).unwrap(), cycle(6));
        assert_eq!(circulant(4, &[1, 2, 3]).unwrap(), complete(4));
    }

    #[test]
    fn circulant_symmetrizes_and_rejects_zero() {
        let conn = circulant_connection(7, &[1, 2]).unwrap();
        assert!(conn.symmetrized);
        assert_eq!(conn.residues, BTreeSet::from([1, 2, 5, 6]));
        assert_eq!(
            circulant(7, &[1, 2]).unwrap(),
            circulant(7, &[1, 2, 5, 6]).unwrap()
        );
        assert!(!circulant_connection(7, &[1, 6]).unwrap().symmetrized);
        assert!(circulant(7, &[0, 1]).is_err());
        assert!(circulant(7, &[7]).is_err());
    }

    #[test]
    fn circulant_rows_are_cyclic_shifts() {
        let g = circulant(11, &[1, 3]).unwrap();
        let dd = distance_data(&g).unwrap();
        for a in &dd.matrices {
            for x in 0..11 {
                for y in 0..11 {
                    assert_eq!(a.get(x, y), a.get(0, (y + 11 - x) % 11));
                }
            }
        }
    }

    #[test]
    fn triangular_four_is_the_octahedron() {
        let t4 = triangular(4);
        assert_eq!(t4.n(), 6);
        assert_eq!(t4.edge_count(), 12);
        assert_eq!(t4.is_regular(), Some(4));
        // Complement is a perfect matching.
        let comp = t4.complement();
        assert_eq!(comp.edge_count(), 3);
        assert_eq!(comp.is_regular(), Some(1));
    }

    #[test]
    fn kronecker_k2_t4() {
        let g = kronecker(&complete(2), &triangular(4));
        assert_eq!(g.n(), 12);
        assert_eq!(g.is_regular(), Some(4));
        assert!(g.is_connected());
        assert_eq!(
            *g.adjacency(),
            complete(2).adjacency().kronecker(triangular(4).adjacency())
        );
        // K2 x K2 is two disjoint edges.
        assert!(!kronecker(&complete(2), &complete(2)).is_connected());
    }

    #[test]
    fn petersen_is_kneser() {
        let g = petersen();
        assert_eq!(g.is_regular(), Some(3));
        assert_eq!(g.edge_count(), 15);
        assert_eq!(distance_data(&g).unwrap().diameter, 2);
    }

    #[test]
    fn chordal_ring_shape() {
        let g = chordal_ring_12_4();
        assert_eq!(g.n(), 12);
        assert_eq!(g.is_regular(), Some(3));
        assert_eq!(distance_data(&g).unwrap().diameter, 4);
    }
}
