//! Equitable partitions, quotient matrices, and the spectrum of block
//! matrices of the form `M_ij = s_ij*J + delta_ij*p_i*I`.
//!
//! For such a block matrix the spectrum is the spectrum of the small
//! quotient `B` (with `b_ij = s_ij*n_j`, `b_ii = s_ii*n_i + p_i`) together
//! with each diagonal shift `p_i` at multiplicity `n_i - 1`.

use num_bigint::BigInt;
use num_traits::Signed;

use crate::charpoly::char_poly;
use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;
use crate::poly::integer_roots;
use crate::spectrum::{SpectralValue, Spectrum, SpectrumEntry};

/// A partition of `0..n` into disjoint nonempty cells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquitablePartition {
    cells: Vec<Vec<usize>>,
    n: usize,
}

impl EquitablePartition {
    /// Validates that the cells are nonempty, disjoint, and cover `0..n`.
    /// (Whether the partition is equitable depends on the matrix and is
    /// checked by `equitable_quotient`.)
    pub fn new(cells: Vec<Vec<usize>>, n: usize) -> Result<EquitablePartition> {
        let mut seen = vec![false; n];
        for cell in &cells {
            if cell.is_empty() {
                return Err(Error::InvalidParameter("partition cell is empty".into()));
            }
            for &v in cell {
                if v >= n {
                    return Err(Error::InvalidParameter(format!(
                        "vertex {v} out of range for order {n}"
                    )));
                }
                if seen[v] {
                    return Err(Error::InvalidParameter(format!(
                        "vertex {v} appears in two cells"
                    )));
                }
                seen[v] = true;
            }
        }
        if seen.iter().any(|&s| !s) {
            return Err(Error::InvalidParameter(
                "partition does not cover every vertex".into(),
            ));
        }
        Ok(EquitablePartition { cells, n })
    }

    /// Contiguous cells of the given sizes, in order.
    pub fn contiguous(sizes: &[usize]) -> Result<EquitablePartition> {
        let n: usize = sizes.iter().sum();
        let mut cells = Vec::with_capacity(sizes.len());
        let mut start = 0;
        for &s in sizes {
            cells.push((start..start + s).collect());
            start += s;
        }
        EquitablePartition::new(cells, n)
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }
}

/// Quotient matrix of an equitable partition: entry (i, j) is the common
/// row sum of block (cell_i x cell_j). Errors (naming the offending block
/// and row pair) when some block has non-constant row sums.
pub fn equitable_quotient(m: &ExactMatrix, p: &EquitablePartition) -> Result<ExactMatrix> {
    if p.n != m.order() {
        return Err(Error::InvalidParameter(format!(
            "partition covers {} vertices but the matrix has order {}",
            p.n,
            m.order()
        )));
    }
    let k = p.cell_count();
    let mut q = ExactMatrix::zero(k);
    for (ci, cell_i) in p.cells.iter().enumerate() {
        for (cj, cell_j) in p.cells.iter().enumerate() {
            let block_row_sum = |r: usize| -> BigInt {
                cell_j.iter().map(|&c| m.entry(r, c).clone()).sum()
            };
            let first = block_row_sum(cell_i[0]);
            for &r in &cell_i[1..] {
                let s = block_row_sum(r);
                if s != first {
                    return Err(Error::NotEquitable {
                        cell_row: ci,
                        cell_col: cj,
                        row_a: cell_i[0],
                        row_b: r,
                        sum_a: first.to_string(),
                        sum_b: s.to_string(),
                    });
                }
            }
            q.set(ci, cj, first);
        }
    }
    Ok(q)
}

/// Block matrix `M_ij = s_ij*J(n_i x n_j) + delta_ij*p_i*I`, described by
/// its coefficients. `expand` materializes the full matrix; `spectrum`
/// gives its exact eigenvalues.
#[derive(Clone, Debug)]
pub struct BlockStructure {
    coeffs: ExactMatrix,
    shifts: Vec<BigInt>,
    sizes: Vec<usize>,
}

impl BlockStructure {
    pub fn new(coeffs: ExactMatrix, shifts: Vec<BigInt>, sizes: Vec<usize>) -> Result<BlockStructure> {
        let k = coeffs.order();
        if shifts.len() != k || sizes.len() != k {
            return Err(Error::InvalidParameter(format!(
                "block description sizes disagree: {k} coefficient rows, {} shifts, {} cell sizes",
                shifts.len(),
                sizes.len()
            )));
        }
        if sizes.iter().any(|&s| s == 0) {
            return Err(Error::InvalidParameter("cell sizes must be positive".into()));
        }
        Ok(BlockStructure {
            coeffs,
            shifts,
            sizes,
        })
    }

    pub fn order(&self) -> usize {
        self.sizes.iter().sum()
    }

    /// The full matrix the description denotes.
    pub fn expand(&self) -> ExactMatrix {
        let n = self.order();
        let mut cell_of = Vec::with_capacity(n);
        for (c, &s) in self.sizes.iter().enumerate() {
            cell_of.extend(std::iter::repeat(c).take(s));
        }
        ExactMatrix::from_fn(n, |i, j| {
            let mut v = self.coeffs.entry(cell_of[i], cell_of[j]).clone();
            if i == j {
                v += &self.shifts[cell_of[i]];
            }
            v
        })
    }

    /// The quotient matrix `B` with `b_ij = s_ij*n_j + delta_ij*p_i`.
    pub fn quotient(&self) -> ExactMatrix {
        let k = self.coeffs.order();
        ExactMatrix::from_fn(k, |i, j| {
            let mut v = self.coeffs.entry(i, j) * BigInt::from(self.sizes[j]);
            if i == j {
                v += &self.shifts[i];
            }
            v
        })
    }

    /// Exact spectrum: eigenvalues of the quotient `B`, plus each diagonal
    /// shift `p_i` with multiplicity `n_i - 1`. `B`'s eigenvalues are
    /// carried symbolically for k <= 2 and via the exact characteristic
    /// polynomial for larger k.
    pub fn spectrum(&self) -> Result<Spectrum> {
        let mut entries: Vec<SpectrumEntry> = Vec::new();
        for (p, &size) in self.shifts.iter().zip(&self.sizes) {
            if size > 1 {
                entries.push(SpectrumEntry::published(
                    SpectralValue::Int(p.clone()),
                    size - 1,
                ));
            }
        }
        let b = self.quotient();
        match b.order() {
            0 => {}
            1 => entries.push(SpectrumEntry::published(
                SpectralValue::Int(b.entry(0, 0).clone()),
                1,
            )),
            2 => {
                let tr = b.trace();
                let det = b.entry(0, 0) * b.entry(1, 1) - b.entry(0, 1) * b.entry(1, 0);
                let disc = &tr * &tr - BigInt::from(4) * det;
                if disc.is_negative() {
                    return Err(Error::InvalidInput(
                        "quotient has complex eigenvalues; no real spectrum".into(),
                    ));
                }
                entries.push(SpectrumEntry::published(
                    SpectralValue::Surd {
                        a: tr,
                        d: disc,
                        q: BigInt::from(2),
                    },
                    1,
                ));
            }
            _ => {
                let fact = integer_roots(&char_poly(&b))?;
                for (root, mult) in &fact.roots {
                    entries.push(SpectrumEntry::published(
                        SpectralValue::Int(root.clone()),
                        *mult,
                    ));
                }
                if fact.remainder.degree().unwrap_or(0) > 0 {
                    entries.push(SpectrumEntry::published(
                        SpectralValue::PolyRoots(fact.remainder.clone()),
                        1,
                    ));
                }
            }
        }
        Spectrum::new(entries, self.order())
    }
}
