//! Symmetric sparse matrices in compressed-row storage.

use crate::error::{Error, Result};

/// Square sparse matrix in CSR format. Assembled matrices keep structural
/// zeros, so mass and stiffness built from the same mesh share one pattern.
#[derive(Debug, Clone)]
pub struct CsrMatrix {
    dim: usize,
    row_offsets: Vec<usize>,
    col_indices: Vec<usize>,
    values: Vec<f64>,
}

impl CsrMatrix {
    /// Builds a matrix from (row, col, value) triplets, summing duplicates.
    pub fn from_triplets(dim: usize, mut triplets: Vec<(usize, usize, f64)>) -> Self {
        triplets.sort_unstable_by_key(|&(r, c, _)| (r, c));
        let mut row_offsets = vec![0usize; dim + 1];
        let mut col_indices: Vec<usize> = Vec::with_capacity(triplets.len());
        let mut values: Vec<f64> = Vec::with_capacity(triplets.len());
        let mut prev = None;
        for (r, c, v) in triplets {
            assert!(r < dim && c < dim, "triplet ({r},{c}) out of bounds");
            if prev == Some((r, c)) {
                *values.last_mut().unwrap() += v;
            } else {
                col_indices.push(c);
                values.push(v);
                row_offsets[r + 1] += 1;
                prev = Some((r, c));
            }
        }
        for r in 0..dim {
            row_offsets[r + 1] += row_offsets[r];
        }
        CsrMatrix {
            dim,
            row_offsets,
            col_indices,
            values,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nnz(&self) -> usize {
        self.values.len()
    }

    /// y = A x.
    pub fn matvec(&self, x: &[f64], y: &mut [f64]) {
        assert_eq!(x.len(), self.dim);
        assert_eq!(y.len(), self.dim);
        for r in 0..self.dim {
            let mut acc = 0.0;
            for k in self.row_offsets[r]..self.row_offsets[r + 1] {
                acc += self.values[k] * x[self.col_indices[k]];
            }
            y[r] = acc;
        }
    }

    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        let mut y = vec![0.0; self.dim];
        self.matvec(x, &mut y);
        y
    }

    /// Entry (i, j), zero if not stored.
    pub fn get(&self, i: usize, j: usize) -> f64 {
        let row = &self.col_indices[self.row_offsets[i]..self.row_offsets[i + 1]];
        match row.binary_search(&j) {
            Ok(k) => self.values[self.row_offsets[i] + k],
            Err(_) => 0.0,
        }
    }

    pub fn diagonal(&self) -> Vec<f64> {
        (0..self.dim).map(|i| self.get(i, i)).collect()
    }

    pub fn entry_sum(&self) -> f64 {
        self.values.iter().sum()
    }

    pub fn values_nonnegative(&self) -> bool {
        self.values.iter().all(|&v| v >= 0.0)
    }

    pub fn row_sums(&self) -> Vec<f64> {
        (0..self.dim)
            .map(|r| self.values[self.row_offsets[r]..self.row_offsets[r + 1]].iter().sum())
            .collect()
    }

    /// True when the pattern contains (j, i) for every stored (i, j).
    pub fn is_structurally_symmetric(&self) -> bool {
        for r in 0..self.dim {
            for k in self.row_offsets[r]..self.row_offsets[r + 1] {
                let c = self.col_indices[k];
                let back = &self.col_indices[self.row_offsets[c]..self.row_offsets[c + 1]];
                if back.binary_search(&r).is_err() {
                    return false;
                }
            }
        }
        true
    }

    /// Largest relative mismatch |a_ij - a_ji| / max|a|.
    pub fn symmetry_error(&self) -> f64 {
        let scale = self
            .values
            .iter()
            .fold(0.0f64, |m, v| m.max(v.abs()))
            .max(f64::MIN_POSITIVE);
        let mut worst = 0.0f64;
        for r in 0..self.dim {
            for k in self.row_offsets[r]..self.row_offsets[r + 1] {
                let c = self.col_indices[k];
                worst = worst.max((self.values[k] - self.get(c, r)).abs() / scale);
            }
        }
        worst
    }

    /// a*X + b*Y for matrices with identical sparsity patterns.
    pub fn linear_combination(a: f64, x: &CsrMatrix, b: f64, y: &CsrMatrix) -> Result<CsrMatrix> {
        if x.dim != y.dim || x.row_offsets != y.row_offsets || x.col_indices != y.col_indices {
            return Err(Error::InvalidInput(
                "linear_combination requires identical sparsity patterns".into(),
            ));
        }
        let values = x
            .values
            .iter()
            .zip(&y.values)
            .map(|(&xv, &yv)| a * xv + b * yv)
            .collect();
        Ok(CsrMatrix {
            dim: x.dim,
            row_offsets: x.row_offsets.clone(),
            col_indices: x.col_indices.clone(),
            values,
        })
    }

    /// Dense row-major copy, for small oracles and debugging.
    pub fn to_dense(&self) -> Vec<f64> {
        let mut dense = vec![0.0; self.dim * self.dim];
        for r in 0..self.dim {
            for k in self.row_offsets[r]..self.row_offsets[r + 1] {
                dense[r * self.dim + self.col_indices[k]] = self.values[k];
            }
        }
        dense
    }
}
