//! Dense exact linear algebra over GF(2).
//!
//! Vectors and matrix rows are packed 64 bits per word; elimination XORs
//! whole rows word-wise. Everything here is deterministic: pivots are chosen
//! left to right, and the canonical particular solution sets every free
//! variable to zero.

mod bitvec;
mod elim;
mod matrix;

pub use bitvec::BitVec;
pub use matrix::{Gf2Matrix, SolutionSet};
