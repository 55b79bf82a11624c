//! One-stop integrality certification of a symmetric integer matrix: exact
//! characteristic polynomial, integer-root peeling, and the floating-point
//! eigenvalue cross-check.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::charpoly::char_poly;
use crate::error::Result;
use crate::jacobi::float_eigenvalues;
use crate::matrix::ExactMatrix;
use crate::poly::{integer_roots, IntPolynomial};

#[derive(Clone, Debug)]
pub struct ExactCertificate {
    pub order: usize,
    /// Integer eigenvalues with exact multiplicities.
    pub integer_roots: BTreeMap<BigInt, usize>,
    /// Factor of the characteristic polynomial carrying the non-integer
    /// eigenvalues; degree 0 exactly when the spectrum is fully integral.
    pub remainder: IntPolynomial,
    /// Numeric eigenvalues (ascending) from Jacobi rotations.
    pub float_eigenvalues: Vec<f64>,
    pub integral: bool,
}

/// Certify a symmetric matrix. Errors on non-symmetric input (via the
/// eigenvalue iteration) — distance and distance-Laplacian matrices are
/// always symmetric.
pub fn certify_matrix(m: &ExactMatrix, tol: f64) -> Result<ExactCertificate> {
    let floats = float_eigenvalues(m, tol)?;
    let fact = integer_roots(&char_poly(m))?;
    Ok(ExactCertificate {
        order: m.order(),
        integral: fact.remainder.degree() == Some(0),
        integer_roots: fact.roots,
        remainder: fact.remainder,
        float_eigenvalues: floats,
    })
}
