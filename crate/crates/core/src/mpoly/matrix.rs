use std::collections::HashMap;

use super::MPoly;
use crate::error::{Error, Result};

/// Largest square size accepted by [`PolyMatrix::det`] unless overridden.
pub const DEFAULT_DET_BOUND: usize = 12;

/// Matrix with polynomial entries sharing one variable count.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    nvars: usize,
    entries: Vec<MPoly>,
}

impl PolyMatrix {
    pub fn new(nvars: usize, rows: Vec<Vec<MPoly>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        if rows.iter().flatten().any(|e| e.nvars() != nvars) {
            return Err(Error::Dimension(
                "entries with different variable counts".into(),
            ));
        }
        Ok(PolyMatrix {
            rows: rows.len(),
            cols,
            nvars,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn get(&self, i: usize, j: usize) -> &MPoly {
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[MPoly] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> PolyMatrix {
        let rows = (0..self.cols)
            .map(|j| (0..self.rows).map(|i| self.get(i, j).clone()).collect())
            .collect();
        PolyMatrix::new(self.nvars, rows).unwrap()
    }

    pub fn swap_rows(&self, a: usize, b: usize) -> PolyMatrix {
        let mut rows: Vec<Vec<MPoly>> = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        rows.swap(a, b);
        PolyMatrix::new(self.nvars, rows).unwrap()
    }

    /// Exact determinant with the default size bound.
    pub fn det(&self) -> Result<MPoly> {
        self.det_bounded(DEFAULT_DET_BOUND)
    }

    /// Laplace expansion memoised over column subsets.
    ///
    /// Layer `r` maps each `r`-subset `S` of columns (as a bitmask) to the
    /// minor on rows `0..r` and columns `S`; expanding row `r` along column
    /// `c` contributes with sign `(-1)^{#{s in S : s > c}}`.
    pub fn det_bounded(&self, bound: usize) -> Result<MPoly> {
        if self.rows != self.cols {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n > bound {
            return Err(Error::SizeBound { size: n, bound });
        }
        let mut layer: HashMap<u32, MPoly> = HashMap::from([(0u32, MPoly::one(self.nvars))]);
        for r in 0..n {
            let mut next: HashMap<u32, MPoly> = HashMap::new();
            for (&mask, minor) in &layer {
                if minor.is_zero() {
                    continue;
                }
                for c in 0..n {
                    if mask & (1 << c) != 0 {
                        continue;
                    }
                    let entry = self.get(r, c);
                    if entry.is_zero() {
                        continue;
                    }
                    let above = (mask >> (c + 1)).count_ones();
                    let mut term = entry * minor;
                    if above % 2 == 1 {
                        term = -&term;
                    }
                    let slot = next
                        .entry(mask | (1 << c))
                        .or_insert_with(|| MPoly::zero(self.nvars));
                    *slot = &*slot + &term;
                }
            }
            layer = next;
        }
        let full = if n == 0 { 0 } else { (1u32 << n) - 1 };
        Ok(layer
            .remove(&full)
            .unwrap_or_else(|| MPoly::zero(self.nvars)))
    }
}
