//! Row-indexed set of active cells with nearest-cell queries under the
//! Manhattan metric.

use std::collections::BTreeSet;

use crate::matrix::{AdjacencyMatrix, Cell};

#[derive(Debug, Clone)]
pub(crate) struct RowIndex {
    rows: Vec<BTreeSet<usize>>,
    len: usize,
}

impl RowIndex {
    pub fn from_matrix(m: &AdjacencyMatrix) -> Self {
        let mut rows = vec![BTreeSet::new(); m.n() + 1];
        let mut len = 0;
        for c in m.ones() {
            rows[c.row].insert(c.col);
            len += 1;
        }
        RowIndex { rows, len }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn remove(&mut self, cell: Cell) -> bool {
        let removed = self.rows[cell.row].remove(&cell.col);
        if removed {
            self.len -= 1;
        }
        removed
    }

    /// The active cell closest to `from`, ordered by `(distance, row, col)`.
    /// Smallest row on a distance tie is the same as smallest signed
    /// `q.row - from.row`. With `exclude_self`, `from` itself is skipped.
    pub fn nearest(&self, from: Cell, exclude_self: bool) -> Option<(usize, Cell)> {
        let n = self.rows.len() - 1;
        let mut best: Option<(usize, usize, usize)> = None;
        for dr in 0..n {
            if best.is_some_and(|(d, _, _)| dr > d) {
                break;
            }
            let above = from.row.checked_sub(dr).filter(|r| *r >= 1);
            let below = Some(from.row + dr).filter(|r| dr > 0 && *r <= n);
            for row in [above, below].into_iter().flatten() {
                let set = &self.rows[row];
                let skip = exclude_self && row == from.row;
                let left = if skip {
                    set.range(..from.col).next_back()
                } else {
                    set.range(..=from.col).next_back()
                };
                let right = set.range(from.col + 1..).next();
                for &col in left.into_iter().chain(right) {
                    let cand = (dr + col.abs_diff(from.col), row, col);
                    if best.is_none_or(|b| cand < b) {
                        best = Some(cand);
                    }
                }
            }
        }
        best.map(|(d, row, col)| (d, Cell::new(row, col)))
    }
}
