//! Floating-point eigenvalues of symmetric integer matrices via the cyclic
//! Jacobi rotation method. Serves as the numeric cross-check for the exact
//! spectra computed elsewhere in the crate.

use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;

pub const DEFAULT_TOL: f64 = 1e-12;

/// Eigenvalues of a symmetric matrix, ascending. Sweeps stop once the
/// off-diagonal Frobenius norm drops below `tol * (1 + ||A||_F)`.
pub fn float_eigenvalues(m: &ExactMatrix, tol: f64) -> Result<Vec<f64>> {
    if !m.is_symmetric() {
        return Err(Error::InvalidInput(
            "eigenvalue iteration requires a symmetric matrix".into(),
        ));
    }
    let flat = m.to_f64()?;
    let n = m.order();
    let rows: Vec<Vec<f64>> = (0..n).map(|i| flat[i * n..(i + 1) * n].to_vec()).collect();
    Ok(symmetric_eigenvalues(rows, tol))
}

/// Jacobi sweeps on a dense symmetric matrix given as rows.
pub fn symmetric_eigenvalues(mut a: Vec<Vec<f64>>, tol: f64) -> Vec<f64> {
    let n = a.len();
    if n == 0 {
        return vec![];
    }
    let fro: f64 = a
        .iter()
        .flat_map(|r| r.iter())
        .map(|v| v * v)
        .sum::<f64>()
        .sqrt();
    let stop = tol * (1.0 + fro);
    for _ in 0..100 {
        let off: f64 = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .map(|(i, j)| 2.0 * a[i][j] * a[i][j])
            .sum::<f64>()
            .sqrt();
        if off < stop {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p][q];
                if apq.abs() <= f64::MIN_POSITIVE {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut eigs: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    eigs.sort_by(|x, y| x.partial_cmp(y).unwrap());
    eigs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charpoly::char_poly;
    use num_bigint::BigInt;

    fn m(rows: &[&[i64]]) -> ExactMatrix {
        ExactMatrix::from_i64_rows(rows).unwrap()
    }

    #[test]
    fn two_by_two_swap_matrix() {
        let eigs = float_eigenvalues(&m(&[&[0, 1], &[1, 0]]), DEFAULT_TOL).unwrap();
        assert!((eigs[0] + 1.0).abs() < 1e-10);
        assert!((eigs[1] - 1.0).abs() < 1e-10);
    }

    #[test]
    fn triangle_adjacency() {
        let eigs = float_eigenvalues(&m(&[&[0, 1, 1], &[1, 0, 1], &[1, 1, 0]]), DEFAULT_TOL)
            .unwrap();
        for (got, want) in eigs.iter().zip([-1.0, -1.0, 2.0]) {
            assert!((got - want).abs() < 1e-10, "{got} vs {want}");
        }
    }

    #[test]
    fn eigenvalues_are_roots_of_exact_characteristic_polynomial() {
        let mat = m(&[
            &[0, 1, 2, 3, 2],
            &[1, 0, 1, 2, 3],
            &[2, 1, 0, 1, 2],
            &[3, 2, 1, 0, 1],
            &[2, 3, 2, 1, 0],
        ]);
        let p = char_poly(&mat);
        let dp = p.derivative();
        for lam in float_eigenvalues(&mat, DEFAULT_TOL).unwrap() {
            // Newton residual |p(x)/p'(x)| as a scale-free root check
            let px = eval_f64(&p, lam);
            let dpx = eval_f64(&dp, lam).abs().max(1.0);
            assert!((px / dpx).abs() < 1e-8, "residual too large at {lam}");
        }
    }

    fn eval_f64(p: &crate::poly::IntPolynomial, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in p.coeffs().iter().rev() {
            acc = acc * x + to_f64(c);
        }
        acc
    }

    fn to_f64(c: &BigInt) -> f64 {
        use num_traits::ToPrimitive;
        c.to_f64().unwrap()
    }

    #[test]
    fn rejects_nonsymmetric() {
        assert!(float_eigenvalues(&m(&[&[0, 1], &[2, 0]]), DEFAULT_TOL).is_err());
    }
}
