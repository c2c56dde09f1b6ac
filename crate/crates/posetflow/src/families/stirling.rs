//! Exact Stirling number rows via the standard recurrences.

use crate::scalar::{from_usize, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StirlingKind {
    /// Unsigned first kind: `s(n, k)` counts permutations of `n` points with
    /// `k` cycles; `s(n+1, k) = n·s(n, k) + s(n, k-1)`.
    First,
    /// Second kind: `S(n, k)` counts partitions of an `n`-set into `k`
    /// blocks; `S(n+1, k) = k·S(n, k) + S(n, k-1)`.
    Second,
}

/// Rows of Stirling numbers, grown on demand and cached.
#[derive(Debug, Clone)]
pub struct StirlingTable<W> {
    kind: StirlingKind,
    rows: Vec<Vec<W>>,
}

impl<W: Scalar> StirlingTable<W> {
    pub fn new(kind: StirlingKind) -> Self {
        Self {
            kind,
            rows: vec![vec![W::one()]],
        }
    }

    pub fn kind(&self) -> StirlingKind {
        self.kind
    }

    /// Row `n`, entries for `k = 0..=n`.
    pub fn row(&mut self, n: usize) -> &[W] {
        while self.rows.len() <= n {
            let prev = &self.rows[self.rows.len() - 1];
            let m = self.rows.len(); // computing row m from row m - 1
            let mut row = Vec::with_capacity(m + 1);
            for k in 0..=m {
                let factor: W = match self.kind {
                    StirlingKind::First => from_usize(m - 1),
                    StirlingKind::Second => from_usize(k),
                };
                let mut value = W::zero();
                if k < m {
                    value = value + factor * prev[k].clone();
                }
                if k > 0 {
                    value = value + prev[k - 1].clone();
                }
                row.push(value);
            }
            self.rows.push(row);
        }
        &self.rows[n]
    }

    pub fn entry(&mut self, n: usize, k: usize) -> W {
        if k > n {
            return W::zero();
        }
        self.row(n)[k].clone()
    }
}

/// One row, entries for `k = 0..=n`.
pub fn stirling_row<W: Scalar>(kind: StirlingKind, n: usize) -> Vec<W> {
    StirlingTable::new(kind).row(n).to_vec()
}
