use super::bitvec::{BitVec, WORD_BITS};

/// Gauss-Jordan elimination workspace over packed rows.
///
/// Columns are scanned left to right; within a column the first row at or
/// below the current rank that holds a 1 becomes the pivot row.
pub(crate) struct Echelon {
    pub rows: Vec<BitVec>,
    pub pivots: Vec<usize>,
}

impl Echelon {
    /// Reduces `rows` to RREF considering the first `pivot_cols` columns.
    pub fn reduce(mut rows: Vec<BitVec>, pivot_cols: usize) -> Self {
        let mut pivots = Vec::new();
        let mut rank = 0;
        for col in 0..pivot_cols {
            if rank == rows.len() {
                break;
            }
            let Some(found) = (rank..rows.len()).find(|&r| rows[r].get(col)) else {
                continue;
            };
            rows.swap(rank, found);
            // Every bit of the pivot row left of `col` is already zero, so
            // only words from `col / 64` onward need XORing.
            let start = col / WORD_BITS;
            let (before, rest) = rows.split_at_mut(rank);
            let (pivot_row, after) = rest.split_first_mut().expect("rank < rows.len()");
            let pivot_words = &pivot_row.words()[start..];
            for other in before.iter_mut().chain(after.iter_mut()) {
                if other.get(col) {
                    for (a, b) in other.words_mut()[start..].iter_mut().zip(pivot_words) {
                        *a ^= b;
                    }
                }
            }
            pivots.push(col);
            rank += 1;
        }
        Self { rows, pivots }
    }

    /// Nullspace basis of the left `n_cols` columns of the reduced system.
    pub fn nullspace_basis(&self, n_cols: usize) -> Vec<BitVec> {
        let mut is_pivot = vec![false; n_cols];
        for &p in self.pivots.iter().filter(|&&p| p < n_cols) {
            is_pivot[p] = true;
        }
        (0..n_cols)
            .filter(|&f| !is_pivot[f])
            .map(|free| {
                let mut v = BitVec::unit(n_cols, free);
                for (row, &p) in self.rows.iter().zip(&self.pivots) {
                    if p < n_cols && row.get(free) {
                        v.set(p, true);
                    }
                }
                v
            })
            .collect()
    }
}
