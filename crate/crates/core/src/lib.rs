//! Exact adjacency-algebra computations for finite simple graphs.
//!
//! Given a connected graph with adjacency matrix `A`, the crate decides
//! whether `span{I, A, ..., A^d}` is closed under the Hadamard product,
//! builds its standard 0-1 basis when it is, counts distinct eigenvalues
//! without computing them, tests distance-regularity, builds the
//! walk-regular partition of vertex pairs, and writes distance matrices as
//! explicit polynomials in `A`. All arithmetic is exact.

#![forbid(unsafe_code)]
#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod error;
pub mod graph;
pub mod linalg;
pub mod spectral;
pub mod structure;
pub mod walkpart;

pub use algebra::{standard_basis, BasisOutcome, StandardBasis};
pub use error::{Error, Result};
pub use graph::{distance_data, DistanceData, Graph};
pub use linalg::{Polynomial, Rational, RationalMatrix};
pub use spectral::{count_distinct_eigenvalues, is_distance_regular};
pub use structure::faithful_diagram_analysis;
pub use walkpart::{distance_matrix_polynomials, is_quotient_polynomial, walk_partition};
