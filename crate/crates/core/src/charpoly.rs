//! Exact determinants and characteristic polynomials of integer matrices.
//!
//! Determinants use Bareiss fraction-free elimination (all intermediate
//! divisions exact), with a machine-word fast path when a Hadamard bound
//! certifies that every intermediate value fits in an `i128`. The
//! characteristic polynomial `det(tI - M)` is recovered by evaluating the
//! determinant at `n + 1` integer points and interpolating, which keeps the
//! working integers no larger than determinant-sized.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::matrix::ExactMatrix;
use crate::poly::IntPolynomial;

/// Exact determinant of a square integer matrix (order 0 gives 1).
pub fn det(m: &ExactMatrix) -> BigInt {
    let n = m.order();
    if n == 0 {
        return BigInt::one();
    }
    if let Some(rows) = i128_rows_within_bound(m) {
        return BigInt::from(det_i128(rows));
    }
    det_bigint(bigint_rows(m))
}

/// Characteristic polynomial `det(tI - M)`, monic of degree `order`.
pub fn char_poly(m: &ExactMatrix) -> IntPolynomial {
    let n = m.order();
    let mut points: Vec<BigInt> = Vec::with_capacity(n + 1);
    points.push(BigInt::zero());
    let mut k = 1i64;
    while points.len() < n + 1 {
        points.push(BigInt::from(k));
        if points.len() < n + 1 {
            points.push(BigInt::from(-k));
        }
        k += 1;
    }
    let values: Vec<BigInt> = points
        .par_iter()
        .map(|t| {
            let shifted = ExactMatrix::from_fn(n, |i, j| {
                let mut v = -m.entry(i, j).clone();
                if i == j {
                    v += t;
                }
                v
            });
            det(&shifted)
        })
        .collect();
    interpolate_integer(&points, &values)
}

/// Lagrange interpolation through integer points, for data known to come
/// from an integer polynomial. Panics if the data is not integral.
fn interpolate_integer(points: &[BigInt], values: &[BigInt]) -> IntPolynomial {
    assert_eq!(points.len(), values.len());
    if points.is_empty() {
        return IntPolynomial::zero();
    }
    // master(t) = prod (t - x_j); basis_i = master / (t - x_i)
    let mut master = IntPolynomial::one();
    for x in points {
        master = master.mul_linear(x);
    }
    let mut denom_lcm = BigInt::one();
    let bases: Vec<(IntPolynomial, BigInt)> = points
        .iter()
        .map(|x| {
            let basis = master
                .divide_linear(x)
                .expect("interpolation point is a root of the master product");
            let d = basis.eval(x);
            denom_lcm = denom_lcm.lcm(&d);
            (basis, d)
        })
        .collect();
    let mut numer = IntPolynomial::zero();
    for ((basis, d), y) in bases.iter().zip(values) {
        let scale = y * (&denom_lcm / d);
        numer = numer.add(&basis.scale(&scale));
    }
    let coeffs = numer
        .coeffs()
        .iter()
        .map(|c| {
            let (q, r) = c.div_rem(&denom_lcm);
            assert!(r.is_zero(), "interpolation data is not an integer polynomial");
            q
        })
        .collect();
    IntPolynomial::new(coeffs)
}

fn bigint_rows(m: &ExactMatrix) -> Vec<Vec<BigInt>> {
    let n = m.order();
    (0..n)
        .map(|i| (0..n).map(|j| m.entry(i, j).clone()).collect())
        .collect()
}

/// Rows as `i128` if the Hadamard bound keeps Bareiss intermediates (and the
/// products formed from them) inside `i128`.
fn i128_rows_within_bound(m: &ExactMatrix) -> Option<Vec<Vec<i128>>> {
    let n = m.order();
    let mut rows = Vec::with_capacity(n);
    let mut log2_bound = 0.0f64;
    for i in 0..n {
        let mut row = Vec::with_capacity(n);
        let mut norm_sq = 0.0f64;
        for j in 0..n {
            let v = m.entry(i, j).to_i128()?;
            let f = v as f64;
            norm_sq += f * f;
            row.push(v);
        }
        log2_bound += 0.5 * norm_sq.max(1.0).log2();
        rows.push(row);
    }
    // products of two intermediates must stay below 2^126
    if log2_bound < 61.0 {
        Some(rows)
    } else {
        None
    }
}

fn det_i128(mut a: Vec<Vec<i128>>) -> i128 {
    let n = a.len();
    let mut prev: i128 = 1;
    let mut sign: i128 = 1;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            let Some(r) = (k + 1..n).find(|&r| a[r][k] != 0) else {
                return 0;
            };
            a.swap(k, r);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

fn det_bigint(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    let mut prev = BigInt::one();
    let mut sign = 1i32;
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, r);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let d = std::mem::take(&mut a[n - 1][n - 1]);
    if sign < 0 {
        -d
    } else {
        d
    }
}
