//! Test-only oracles. Nothing here calls the crate's elimination, generator
//! or solver code: matrices are plain `Vec<Vec<u8>>` and click sets are
//! `u32` masks.

#![allow(dead_code)]

use lightsout::{BitVec, Gf2Matrix};

pub type Dense = Vec<Vec<u8>>;

pub fn to_dense(a: &Gf2Matrix) -> Dense {
    (0..a.n_rows())
        .map(|i| (0..a.n_cols()).map(|j| u8::from(a.get(i, j))).collect())
        .collect()
}

pub fn to_bits(v: &BitVec) -> Vec<u8> {
    v.iter().map(u8::from).collect()
}

/// Textbook row reduction on bytes.
pub fn naive_rank(mut m: Dense) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| m[r][c] == 1) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank && row[c] == 1 {
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x ^= y;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Classic k×k Lights Out matrix built directly: every cell toggles itself
/// and its up/down/left/right neighbors.
pub fn naive_classic_grid(k: usize) -> Dense {
    let n = k * k;
    let mut m = vec![vec![0u8; n]; n];
    for r in 0..k {
        for c in 0..k {
            let v = r * k + c;
            m[v][v] = 1;
            if r > 0 {
                m[v][v - k] = 1;
            }
            if r + 1 < k {
                m[v][v + k] = 1;
            }
            if c > 0 {
                m[v][v - 1] = 1;
            }
            if c + 1 < k {
                m[v][v + 1] = 1;
            }
        }
    }
    m
}

/// Column `j` of a dense matrix with at most 32 rows as a bit mask.
fn column_mask(m: &Dense, j: usize) -> u32 {
    m.iter()
        .enumerate()
        .fold(0, |acc, (i, row)| acc | (u32::from(row[j]) << i))
}

fn vec_mask(v: &[u8]) -> u32 {
    v.iter()
        .enumerate()
        .fold(0, |acc, (i, &b)| acc | (u32::from(b) << i))
}

/// Exhaustive search over every input `x` (Gray-code walk). Returns the
/// number of solutions of `m·x = b` and the minimum weight among them.
pub fn exhaustive_solutions(m: &Dense, b: &[u8]) -> (u64, Option<u32>) {
    let cols = m.first().map_or(0, Vec::len);
    assert!(cols <= 32 && m.len() <= 32);
    let masks: Vec<u32> = (0..cols).map(|j| column_mask(m, j)).collect();
    let goal = vec_mask(b);
    let mut image = 0u32;
    let mut count = 0;
    let mut best: Option<u32> = None;
    let total = 1u64 << cols;
    for step in 0..total {
        if step > 0 {
            image ^= masks[step.trailing_zeros() as usize];
        }
        if image == goal {
            count += 1;
            let w = (step ^ (step >> 1)).count_ones();
            best = Some(best.map_or(w, |b| b.min(w)));
        }
    }
    (count, best)
}

/// Minimum weight and lexicographically smallest minimum-weight solution,
/// returned as a 0/1 string. Exhaustive, so keep `cols` small.
pub fn exhaustive_minimal(m: &Dense, b: &[u8]) -> Option<(u32, String)> {
    let cols = m.first().map_or(0, Vec::len);
    assert!(cols <= 20);
    let mut best: Option<(u32, String)> = None;
    for x in 0u32..(1 << cols) {
        let image: Vec<u8> = m
            .iter()
            .map(|row| (0..cols).fold(0, |acc, j| acc ^ (row[j] & ((x >> j) & 1) as u8)))
            .collect();
        if image == b {
            let w = x.count_ones();
            let s: String = (0..cols)
                .map(|j| if (x >> j) & 1 == 1 { '1' } else { '0' })
                .collect();
            let better = match &best {
                None => true,
                Some((bw, bs)) => w < *bw || (w == *bw && s < *bs),
            };
            if better {
                best = Some((w, s));
            }
        }
    }
    best
}
