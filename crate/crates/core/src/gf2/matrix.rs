use std::fmt;
use std::str::FromStr;

use super::bitvec::{BitVec, WORD_BITS};
use super::elim::Echelon;
use crate::{Error, Result};

/// Dense matrix over GF(2) stored as packed rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf2Matrix {
    n_rows: usize,
    n_cols: usize,
    rows: Vec<BitVec>,
}

/// All solutions of a consistent system `A·x = b`: a particular solution
/// plus a basis of the nullspace of `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionSet {
    pub particular: BitVec,
    pub nullspace_basis: Vec<BitVec>,
}

impl SolutionSet {
    pub fn nullity(&self) -> usize {
        self.nullspace_basis.len()
    }

    /// Every member of the coset `particular + Nul(A)` in Gray-code order,
    /// starting with the particular solution. Yields `2^nullity` vectors.
    pub fn members(&self) -> impl Iterator<Item = BitVec> + '_ {
        let k = self.nullity();
        assert!(k < 64, "coset too large to enumerate (nullity {k})");
        let total = 1u64 << k;
        let mut current = self.particular.clone();
        let mut step = 0u64;
        std::iter::from_fn(move || {
            if step == total {
                return None;
            }
            if step > 0 {
                current.xor_assign(&self.nullspace_basis[step.trailing_zeros() as usize]);
            }
            step += 1;
            Some(current.clone())
        })
    }
}

impl Gf2Matrix {
    pub fn zeros(n_rows: usize, n_cols: usize) -> Self {
        Self {
            n_rows,
            n_cols,
            rows: vec![BitVec::zeros(n_cols); n_rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| i == j)
    }

    pub fn from_fn(n_rows: usize, n_cols: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut m = Self::zeros(n_rows, n_cols);
        for i in 0..n_rows {
            for j in 0..n_cols {
                if f(i, j) {
                    m.rows[i].set(j, true);
                }
            }
        }
        m
    }

    /// Builds a matrix from its rows. The column count must be given
    /// explicitly so that matrices with zero rows keep their width.
    pub fn from_rows(n_cols: usize, rows: Vec<BitVec>) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != n_cols) {
            return Err(Error::dim("matrix row", n_cols, bad.len()));
        }
        Ok(Self {
            n_rows: rows.len(),
            n_cols,
            rows,
        })
    }

    /// Rows given as `0`/`1` strings, e.g. `&["11", "10"]`.
    pub fn from_row_strs(rows: &[&str]) -> Result<Self> {
        let parsed = rows
            .iter()
            .map(|r| r.parse::<BitVec>())
            .collect::<Result<Vec<_>>>()?;
        let n_cols = parsed.first().map_or(0, BitVec::len);
        Self::from_rows(n_cols, parsed)
    }

    #[inline]
    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    #[inline]
    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn is_square(&self) -> bool {
        self.n_rows == self.n_cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].get(j)
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.rows[i].set(j, value);
    }

    pub fn row(&self, i: usize) -> &BitVec {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[BitVec] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<BitVec> {
        self.rows
    }

    pub fn column(&self, j: usize) -> BitVec {
        assert!(j < self.n_cols, "column {j} out of range");
        let mut c = BitVec::zeros(self.n_rows);
        for (i, r) in self.rows.iter().enumerate() {
            if r.get(j) {
                c.set(i, true);
            }
        }
        c
    }

    /// `A·x`, i.e. the XOR of the columns selected by `x`. Computed row-wise
    /// as one packed dot product per row.
    pub fn mat_vec(&self, x: &BitVec) -> Result<BitVec> {
        if x.len() != self.n_cols {
            return Err(Error::dim("matrix-vector product", self.n_cols, x.len()));
        }
        let mut out = BitVec::zeros(self.n_rows);
        let out_words = out.words_mut();
        for (i, r) in self.rows.iter().enumerate() {
            if r.dot_unchecked(x) {
                out_words[i / WORD_BITS] |= 1u64 << (i % WORD_BITS);
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.n_cols, self.n_rows);
        for (i, r) in self.rows.iter().enumerate() {
            for j in r.iter_ones() {
                t.rows[j].set(i, true);
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        for (i, r) in self.rows.iter().enumerate() {
            if r.iter_ones().any(|j| !self.rows[j].get(i)) {
                return false;
            }
        }
        true
    }

    /// The vector of diagonal entries `(a_00, a_11, ...)`.
    pub fn diagonal(&self) -> Result<BitVec> {
        if !self.is_square() {
            return Err(Error::dim(
                "diagonal of non-square matrix",
                self.n_rows,
                self.n_cols,
            ));
        }
        let mut d = BitVec::zeros(self.n_rows);
        for (i, r) in self.rows.iter().enumerate() {
            if r.get(i) {
                d.set(i, true);
            }
        }
        Ok(d)
    }

    /// Reduced row echelon form and the (strictly increasing) pivot columns.
    pub fn rref(&self) -> (Gf2Matrix, Vec<usize>) {
        let ech = Echelon::reduce(self.rows.clone(), self.n_cols);
        let pivots = ech.pivots.clone();
        let reduced = Gf2Matrix {
            n_rows: self.n_rows,
            n_cols: self.n_cols,
            rows: ech.rows,
        };
        (reduced, pivots)
    }

    pub fn rank(&self) -> usize {
        Echelon::reduce(self.rows.clone(), self.n_cols).pivots.len()
    }

    /// Canonical solution of `A·x = b` (free variables set to zero), or
    /// `None` when `b` is outside the column space.
    pub fn solve(&self, b: &BitVec) -> Result<Option<BitVec>> {
        Ok(self.solution_set(b)?.map(|s| s.particular))
    }

    /// One basis vector per free column: the free variable set to 1, the
    /// other free variables 0 and the pivot variables back-substituted.
    pub fn nullspace_basis(&self) -> Vec<BitVec> {
        Echelon::reduce(self.rows.clone(), self.n_cols).nullspace_basis(self.n_cols)
    }

    pub fn solution_set(&self, b: &BitVec) -> Result<Option<SolutionSet>> {
        if b.len() != self.n_rows {
            return Err(Error::dim("right-hand side", self.n_rows, b.len()));
        }
        let width = self.n_cols + 1;
        let augmented = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let mut wide = BitVec::from_words(width, r.words().to_vec());
                wide.set(self.n_cols, b.get(i));
                wide
            })
            .collect();
        let ech = Echelon::reduce(augmented, width);
        if ech.pivots.last() == Some(&self.n_cols) {
            return Ok(None);
        }
        let mut particular = BitVec::zeros(self.n_cols);
        for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
            if row.get(self.n_cols) {
                particular.set(p, true);
            }
        }
        Ok(Some(SolutionSet {
            particular,
            nullspace_basis: ech.nullspace_basis(self.n_cols),
        }))
    }
}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf2Matrix {}x{} [", self.n_rows, self.n_cols)?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{r}")?;
        }
        f.write_str("]")
    }
}

/// Plain-text literal: a `ROWS COLS` header line, then one line of `0`/`1`
/// characters per row.
impl fmt::Display for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.n_rows, self.n_cols)?;
        for r in &self.rows {
            writeln!(f, "{r}")?;
        }
        Ok(())
    }
}

impl FromStr for Gf2Matrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut lines = s.lines().map(str::trim).skip_while(|l| l.is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("missing \"ROWS COLS\" header".into()))?;
        let dims: Vec<usize> = header
            .split_whitespace()
            .map(|t| t.parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| Error::Parse(format!("bad header {header:?}: {e}")))?;
        let [n_rows, n_cols] = dims[..] else {
            return Err(Error::Parse(format!(
                "header must be \"ROWS COLS\", got {header:?}"
            )));
        };
        // rows of a zero-column matrix are empty lines, so take exactly n_rows
        let rows = lines
            .by_ref()
            .take(n_rows)
            .map(str::parse)
            .collect::<Result<Vec<BitVec>>>()?;
        if rows.len() != n_rows {
            return Err(Error::dim("matrix literal rows", n_rows, rows.len()));
        }
        if lines.any(|l| !l.is_empty()) {
            return Err(Error::Parse("trailing content after matrix rows".into()));
        }
        Self::from_rows(n_cols, rows)
    }
}
