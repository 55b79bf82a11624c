//! Exact spectral toolkit for distance matrices of wheel-like graph
//! families.
//!
//! The crate builds the graph families (cycles, joins of edgeless graphs
//! with cycles, balanced-bipartite joins, dumbbells), derives their
//! distance and distance-Laplacian matrices exactly, evaluates closed-form
//! spectra symbolically, certifies integrality with arbitrary-precision
//! characteristic polynomials, and reproduces the integrality
//! characterizations by both Diophantine search and a brute-force matrix
//! oracle.

#![forbid(unsafe_code)]

pub mod certify;
pub mod characterize;
pub mod charpoly;
pub mod diophantine;
pub mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod jacobi;
pub mod matrix;
pub mod poly;
pub mod quotient;
pub mod report;
pub mod spectrum;

pub use certify::{certify_matrix, ExactCertificate};
pub use characterize::{
    check_no_d_integral_dumbbells, find_d_integral_egw, find_d_integral_kpp,
    find_d_integral_wheels, find_dl_integral_dumbbells, graph_is_d_integral,
    graph_is_dl_integral, SearchRange, TheoremReport, INTEGRAL_CYCLE_LENGTHS,
};
pub use charpoly::{char_poly, det};
pub use diophantine::{factor_pairs, is_perfect_square, perfect_sqrt, pythagorean_with_leg};
pub use error::{Error, Result};
pub use families::{
    cycle_adjacency_spectrum, dumbbell_distance_laplacian_spectrum, dumbbell_distance_spectrum,
    egw_distance_spectrum, kpp_join_cycle_distance_spectrum, wheel_distance_spectrum,
};
pub use graph::{
    complete, complete_bipartite, cycle, distance_laplacian, distance_matrix, dumbbell, egw,
    empty_graph, generalized_wheel, join, transmission, union, Graph,
};
pub use graph6::{emit_graph6, parse_graph6};
pub use jacobi::{float_eigenvalues, DEFAULT_TOL};
pub use matrix::ExactMatrix;
pub use poly::{integer_roots, real_roots, IntPolynomial, IntegerRootFactorization};
pub use quotient::{equitable_quotient, BlockStructure, EquitablePartition};
pub use report::{
    spectrum_report_to_csv, theorem_report_to_csv, to_json_bytes, GraphDescriptor, SpectrumReport,
};
pub use spectrum::{IntegralityVerdict, Provenance, SpectralValue, Spectrum, SpectrumEntry};
