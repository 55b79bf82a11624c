//! Dense square matrices over arbitrary-precision integers.
//!
//! Everything downstream (characteristic polynomials, quotients, Laplacians)
//! is exact; no float ever enters this type.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    n: usize,
    data: Vec<BigInt>, // row-major
}

impl ExactMatrix {
    pub fn zero(n: usize) -> Self {
        ExactMatrix {
            n,
            data: vec![BigInt::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.set(i, i, BigInt::from(1));
        }
        m
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        ExactMatrix { n, data }
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let n = rows.len();
        for (i, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(Error::InvalidInput(format!(
                    "row {i} has length {}, expected {n}",
                    r.len()
                )));
            }
        }
        Ok(ExactMatrix {
            n,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.n + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn row_sum(&self, i: usize) -> BigInt {
        self.row(i).iter().sum()
    }

    pub fn trace(&self) -> BigInt {
        (0..self.n).map(|i| self.entry(i, i)).sum()
    }

    pub fn is_symmetric(&self) -> bool {
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.entry(i, j) != self.entry(j, i) {
                    return false;
                }
            }
        }
        true
    }

    pub fn sub(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        if self.n != other.n {
            return Err(Error::InvalidInput(format!(
                "order mismatch: {} vs {}",
                self.n, other.n
            )));
        }
        Ok(ExactMatrix {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// Entries as f64, row-major. Errors when an entry overflows f64 range
    /// (cannot happen for matrices built from graphs of sane size).
    pub fn to_f64(&self) -> Result<Vec<f64>> {
        self.data
            .iter()
            .map(|v| {
                v.to_f64()
                    .ok_or_else(|| Error::InvalidInput(format!("entry {v} does not fit in f64")))
            })
            .collect()
    }

    /// Largest |entry|, as BigInt.
    pub fn max_abs(&self) -> BigInt {
        self.data
            .iter()
            .map(|v| if v.sign() == num_bigint::Sign::Minus { -v } else { v.clone() })
            .max()
            .unwrap_or_else(BigInt::zero)
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix({}x{})", self.n, self.n)?;
        for i in 0..self.n {
            let row: Vec<String> = self.row(i).iter().map(|v| v.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_trace_and_symmetry() {
        let m = ExactMatrix::identity(4);
        assert_eq!(m.trace(), BigInt::from(4));
        assert!(m.is_symmetric());
        assert_eq!(m.row_sum(2), BigInt::from(1));
    }

    #[test]
    fn from_rows_rejects_ragged() {
        let rows = vec![vec![BigInt::from(1)], vec![BigInt::from(1), BigInt::from(2)]];
        assert!(ExactMatrix::from_rows(rows).is_err());
    }

    #[test]
    fn sub_and_max_abs() {
        let a = ExactMatrix::from_i64_rows(&[&[0, 5], &[5, 0]]).unwrap();
        let b = ExactMatrix::from_i64_rows(&[&[0, 7], &[7, 0]]).unwrap();
        let d = a.sub(&b).unwrap();
        assert_eq!(*d.entry(0, 1), BigInt::from(-2));
        assert_eq!(d.max_abs(), BigInt::from(2));
    }
}
