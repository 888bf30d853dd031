//! Test corpus and independent oracles shared by the integration tests.
//!
//! The oracles use plain integer vectors and their own algorithms; nothing
//! here calls into the crate's linear algebra.

#![allow(clippy::needless_range_loop)]

#![allow(dead_code)]

use std::collections::VecDeque;

use adjalg::graph::{
    chordal_ring_12_4, circulant, complete, cycle, kronecker, petersen, triangular,
};
use adjalg::Graph;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const SEED: u64 = 0x5eed_ad1a;

pub fn kronecker_example() -> Graph {
    kronecker(&complete(2), &triangular(4))
}

pub fn cayley_z7() -> Graph {
    circulant(7, &[1, 2]).unwrap()
}

pub fn worked_examples() -> Vec<(String, Graph)> {
    vec![
        ("K2 x T4".to_owned(), kronecker_example()),
        ("chordal ring (12,4)".to_owned(), chordal_ring_12_4()),
        ("Cay(Z7,{1,2})".to_owned(), cayley_z7()),
    ]
}

pub fn random_connected_graph(rng: &mut ChaCha8Rng, max_n: usize) -> Graph {
    loop {
        let n = rng.gen_range(2..=max_n);
        let p: f64 = rng.gen_range(0.2..0.8);
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|_| rng.gen_bool(p))
            .collect();
        let g = Graph::from_edge_list(n, &edges).unwrap();
        if g.is_connected() {
            return g;
        }
    }
}

pub fn random_connected_circulant(rng: &mut ChaCha8Rng, max_n: usize) -> (usize, Vec<usize>, Graph) {
    loop {
        let n = rng.gen_range(5..=max_n);
        let connection: Vec<usize> = (1..=n / 2).filter(|_| rng.gen_bool(0.4)).collect();
        if connection.is_empty() {
            continue;
        }
        let g = circulant(n, &connection).unwrap();
        if g.is_connected() {
            return (n, connection, g);
        }
    }
}

/// The three worked examples, `K_n` and `C_n` for `n <= 12`, Petersen, 50
/// random connected graphs on at most 10 vertices and 20 random connected
/// circulants on at most 16 vertices.
pub fn corpus() -> Vec<(String, Graph)> {
    let mut out = worked_examples();
    out.extend((1..=12).map(|n| (format!("K{n}"), complete(n))));
    out.extend((3..=12).map(|n| (format!("C{n}"), cycle(n))));
    out.push(("Petersen".to_owned(), petersen()));
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for i in 0..50 {
        let g = random_connected_graph(&mut rng, 10);
        out.push((format!("random #{i} (n={})", g.n()), g));
    }
    for _ in 0..20 {
        let (n, conn, g) = random_connected_circulant(&mut rng, 16);
        out.push((format!("Circ({n},{conn:?})"), g));
    }
    out
}

pub fn int_adjacency(g: &Graph) -> Vec<Vec<BigInt>> {
    (0..g.n())
        .map(|u| {
            (0..g.n())
                .map(|v| BigInt::from(u8::from(g.has_edge(u, v))))
                .collect()
        })
        .collect()
}

fn int_mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|k| &a[i][k] * &b[k][j]).sum())
                .collect()
        })
        .collect()
}

/// `A^ell` with plain integer arithmetic.
pub fn int_power(g: &Graph, ell: usize) -> Vec<Vec<BigInt>> {
    let a = int_adjacency(g);
    let mut out: Vec<Vec<BigInt>> = (0..g.n())
        .map(|i| {
            (0..g.n())
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect();
    for _ in 0..ell {
        out = int_mul(&out, &a);
    }
    out
}

/// Characteristic polynomial `det(tI - A)` by Faddeev–LeVerrier, lowest
/// degree first.
pub fn characteristic_polynomial(a: &[Vec<BigInt>]) -> Vec<BigInt> {
    let n = a.len();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut m: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); n]; n];
    for k in 1..=n {
        let mut next = int_mul(a, &m);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &coeffs[n - k + 1];
        }
        m = next;
        let am = int_mul(a, &m);
        let trace: BigInt = (0..n).map(|i| am[i][i].clone()).sum();
        coeffs[n - k] = -trace / BigInt::from(k);
    }
    coeffs
}

fn trim(p: &mut Vec<BigRational>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn poly_rem(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut r = a.to_vec();
    trim(&mut r);
    let lead = b.last().expect("nonzero divisor").clone();
    while r.len() >= b.len() {
        let factor = r.last().unwrap() / &lead;
        let shift = r.len() - b.len();
        for (i, c) in b.iter().enumerate() {
            r[shift + i] -= &factor * c;
        }
        trim(&mut r);
    }
    r
}

/// Number of distinct complex roots: `deg p - deg gcd(p, p')`.
pub fn distinct_root_count(p: &[BigInt]) -> usize {
    let mut f: Vec<BigRational> = p.iter().cloned().map(BigRational::from_integer).collect();
    trim(&mut f);
    let degree = f.len() - 1;
    if degree == 0 {
        return 0;
    }
    let mut g: Vec<BigRational> = f
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
        .collect();
    trim(&mut g);
    let mut a = f;
    while !g.is_empty() {
        let r = poly_rem(&a, &g);
        a = g;
        g = r;
    }
    degree - (a.len() - 1)
}

pub fn oracle_eigenvalue_count(g: &Graph) -> usize {
    if g.n() == 0 {
        return 0;
    }
    distinct_root_count(&characteristic_polynomial(&int_adjacency(g)))
}

pub fn bfs_distances(g: &Graph) -> Vec<Vec<Option<usize>>> {
    (0..g.n())
        .map(|s| {
            let mut dist = vec![None; g.n()];
            dist[s] = Some(0);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for v in 0..g.n() {
                    if g.has_edge(u, v) && dist[v].is_none() {
                        dist[v] = Some(dist[u].unwrap() + 1);
                        queue.push_back(v);
                    }
                }
            }
            dist
        })
        .collect()
}

/// Definitional check: around every vertex the distance partition has
/// `c_i`, `b_i` depending only on `i`. Returns `(b_0..b_{D-1}; c_1..c_D)`.
pub fn oracle_intersection_array(g: &Graph) -> Option<(Vec<usize>, Vec<usize>)> {
    let dist = bfs_distances(g);
    let n = g.n();
    let dist: Vec<Vec<usize>> = dist
        .into_iter()
        .map(|row| row.into_iter().collect::<Option<Vec<_>>>())
        .collect::<Option<_>>()?;
    let diameter = dist.iter().flatten().copied().max().unwrap_or(0);
    let mut params: Vec<Option<(usize, usize)>> = vec![None; diameter + 1];
    for x in 0..n {
        for y in 0..n {
            let i = dist[x][y];
            let c = (0..n)
                .filter(|&z| g.has_edge(y, z) && dist[x][z] + 1 == i)
                .count();
            let b = (0..n)
                .filter(|&z| g.has_edge(y, z) && dist[x][z] == i + 1)
                .count();
            match params[i] {
                None => params[i] = Some((c, b)),
                Some(p) if p != (c, b) => return None,
                Some(_) => {}
            }
        }
    }
    let params: Vec<(usize, usize)> = params.into_iter().map(Option::unwrap).collect();
    Some((
        params[..diameter].iter().map(|p| p.1).collect(),
        params[1..].iter().map(|p| p.0).collect(),
    ))
}

pub fn is_nonnegative_integer(x: &BigRational) -> bool {
    x.is_integer() && !x.is_negative()
}
