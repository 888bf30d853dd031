mod common;

use adjalg::algebra::{is_hadamard_closed, standard_basis, BasisOutcome};
use adjalg::graph::{kronecker, parse_edge_list, write_edge_list};
use adjalg::linalg::{mat_mul, poly_eval_matrix, trace_inner, Polynomial, Rational, RationalMatrix};
use adjalg::spectral::count_distinct_eigenvalues;
use adjalg::walkpart::is_quotient_polynomial;
use adjalg::{Error, Graph};
use num_bigint::BigInt;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)))
}

fn square(n: usize) -> impl Strategy<Value = RationalMatrix> {
    prop::collection::vec(rational(), n * n)
        .prop_map(move |e| RationalMatrix::new(n, n, e).unwrap())
}

fn symmetric(n: usize) -> impl Strategy<Value = RationalMatrix> {
    square(n).prop_map(|m| m.add(&m.transpose()).unwrap())
}

fn polynomial() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(rational(), 0..5).prop_map(Polynomial::new)
}

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let edges: Vec<(usize, usize)> =
                pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e).collect();
            Graph::from_edge_list(n, &edges).unwrap()
        })
    })
}

fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    graph(max_n).prop_filter("connected", Graph::is_connected)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn trace_inner_is_symmetric_and_bilinear(
        x in square(4), y in square(4), z in square(4), a in rational(), b in rational()
    ) {
        prop_assert_eq!(trace_inner(&x, &y).unwrap(), trace_inner(&y, &x).unwrap());
        let combo = x.scale(&a).add(&y.scale(&b)).unwrap();
        prop_assert_eq!(
            trace_inner(&combo, &z).unwrap(),
            a * trace_inner(&x, &z).unwrap() + b * trace_inner(&y, &z).unwrap()
        );
    }

    #[test]
    fn polynomial_evaluation_is_a_homomorphism(p in polynomial(), q in polynomial(), m in symmetric(3)) {
        let pm = poly_eval_matrix(&p, &m).unwrap();
        let qm = poly_eval_matrix(&q, &m).unwrap();
        prop_assert_eq!(poly_eval_matrix(&p.add(&q), &m).unwrap(), pm.add(&qm).unwrap());
        prop_assert_eq!(poly_eval_matrix(&p.mul(&q), &m).unwrap(), mat_mul(&pm, &qm).unwrap());
    }

    #[test]
    fn eigenvalue_count_matches_oracle(g in graph(8)) {
        prop_assert_eq!(
            count_distinct_eigenvalues(g.adjacency()).unwrap(),
            common::oracle_eigenvalue_count(&g)
        );
    }

    #[test]
    fn rational_and_integer_counts_agree(m in symmetric(4)) {
        let scaled = m.scale(&Rational::from_integer(BigInt::from(6 * 5 * 4)));
        prop_assert_eq!(
            count_distinct_eigenvalues(&m).unwrap(),
            count_distinct_eigenvalues(&scaled).unwrap()
        );
    }

    #[test]
    fn closure_agrees_with_walk_classes(g in connected_graph(8)) {
        let qp = is_quotient_polynomial(&g).unwrap().0;
        match standard_basis(&g) {
            Ok(outcome) => prop_assert_eq!(outcome.is_closed(), qp),
            Err(Error::NotRegular) => prop_assert!(!qp),
            Err(e) => prop_assert!(false, "unexpected {:?}", e),
        }
    }

    #[test]
    fn closure_witness_reproduces(g in connected_graph(8)) {
        prop_assume!(g.is_regular().is_some());
        if let BasisOutcome::NotClosed(failure) = standard_basis(&g).unwrap() {
            use adjalg::algebra::ClosureWitness;
            match failure.witness {
                ClosureWitness::NonBinaryEntry { index, row, col, value } => {
                    prop_assert_eq!(failure.reduced[index].get(row, col), &value);
                    prop_assert!(value != Rational::from_integer(0.into()));
                    prop_assert!(value != Rational::from_integer(1.into()));
                }
                ClosureWitness::ProductOutsideSpan { i, j } => {
                    let h = adjalg::linalg::hadamard(&failure.reduced[i], &failure.reduced[j]).unwrap();
                    prop_assert!(!h.is_zero());
                }
            }
        } else {
            prop_assert!(is_hadamard_closed(&g).unwrap());
        }
    }

    #[test]
    fn kronecker_adjacency_is_tensor_product(g in graph(4), h in graph(4)) {
        prop_assert_eq!(
            kronecker(&g, &h).adjacency().clone(),
            g.adjacency().kronecker(h.adjacency())
        );
    }

    #[test]
    fn edge_list_round_trip(g in graph(9)) {
        prop_assert_eq!(parse_edge_list(&write_edge_list(&g, &[])).unwrap(), g);
    }
}
