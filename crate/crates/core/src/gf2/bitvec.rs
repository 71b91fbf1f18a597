use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

pub(crate) const WORD_BITS: usize = 64;

#[inline]
pub(crate) fn words_for(len: usize) -> usize {
    len.div_ceil(WORD_BITS)
}

/// Fixed-length vector over GF(2), packed into 64-bit words.
///
/// Bit `i` lives in word `i / 64` at position `i % 64`. Storage bits at
/// logical indices `>= len` are always zero, so word-wise equality,
/// popcount and hashing are exact.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; words_for(len)],
        }
    }

    pub fn ones(len: usize) -> Self {
        let mut v = Self {
            len,
            words: vec![u64::MAX; words_for(len)],
        };
        v.clear_padding();
        v
    }

    /// Vector of length `len` with only bit `index` set.
    pub fn unit(len: usize, index: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(index, true);
        v
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    /// Vector with ones at the given indices.
    pub fn from_indices(len: usize, ones: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut v = Self::zeros(len);
        for i in ones {
            if i >= len {
                return Err(Error::invalid(format!(
                    "bit index {i} out of range for length {len}"
                )));
            }
            v.set(i, true);
        }
        Ok(v)
    }

    /// Builds a vector from raw words; bits past `len` are discarded.
    pub fn from_words(len: usize, mut words: Vec<u64>) -> Self {
        words.resize(words_for(len), 0);
        let mut v = Self { len, words };
        v.clear_padding();
        v
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(
            i < self.len,
            "bit index {i} out of range (len {})",
            self.len
        );
        (self.words[i / WORD_BITS] >> (i % WORD_BITS)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(
            i < self.len,
            "bit index {i} out of range (len {})",
            self.len
        );
        let mask = 1u64 << (i % WORD_BITS);
        if value {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        assert!(
            i < self.len,
            "bit index {i} out of range (len {})",
            self.len
        );
        self.words[i / WORD_BITS] ^= 1u64 << (i % WORD_BITS);
    }

    /// Number of ones.
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// In-place addition over GF(2). Panics on length mismatch; use
    /// [`BitVec::checked_xor`] for fallible input.
    #[inline]
    pub fn xor_assign(&mut self, other: &BitVec) {
        assert_eq!(self.len, other.len, "xor of vectors with different lengths");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn checked_xor(&self, other: &BitVec) -> Result<BitVec> {
        if self.len != other.len {
            return Err(Error::dim("xor", self.len, other.len));
        }
        let mut out = self.clone();
        out.xor_assign(other);
        Ok(out)
    }

    /// Inner product over GF(2): parity of the positions where both are 1.
    pub fn dot(&self, other: &BitVec) -> Result<bool> {
        if self.len != other.len {
            return Err(Error::dim("dot product", self.len, other.len));
        }
        Ok(self.dot_unchecked(other))
    }

    #[inline]
    pub(crate) fn dot_unchecked(&self, other: &BitVec) -> bool {
        let mut acc = 0u64;
        for (a, b) in self.words.iter().zip(&other.words) {
            acc ^= a & b;
        }
        acc.count_ones() & 1 == 1
    }

    /// Indices of set bits, ascending.
    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * WORD_BITS + b)
            })
        })
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    /// Lowest index holding a 1.
    pub fn first_one(&self) -> Option<usize> {
        self.iter_ones().next()
    }

    /// Orders vectors by their 0/1 string read from index 0, with `0 < 1`.
    /// Vectors of different lengths compare by length first.
    pub fn lex_cmp(&self, other: &BitVec) -> Ordering {
        if self.len != other.len {
            return self.len.cmp(&other.len);
        }
        for (a, b) in self.words.iter().zip(&other.words) {
            let diff = a ^ b;
            if diff != 0 {
                let bit = diff.trailing_zeros();
                return if (a >> bit) & 1 == 0 {
                    Ordering::Less
                } else {
                    Ordering::Greater
                };
            }
        }
        Ordering::Equal
    }

    #[inline]
    pub(crate) fn words_mut(&mut self) -> &mut [u64] {
        &mut self.words
    }

    fn clear_padding(&mut self) {
        let tail = self.len % WORD_BITS;
        if tail != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << tail) - 1;
            }
        }
    }
}

impl fmt::Display for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.iter().map(|b| if b { '1' } else { '0' }).collect();
        f.write_str(&s)
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVec({self})")
    }
}

impl FromStr for BitVec {
    type Err = Error;

    /// Parses a string of `0`/`1` characters; index 0 is the first character.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut v = BitVec::zeros(s.chars().count());
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => v.set(i, true),
                other => {
                    return Err(Error::Parse(format!(
                        "expected '0' or '1' at position {i}, found {other:?}"
                    )))
                }
            }
        }
        Ok(v)
    }
}

impl std::ops::BitXor for &BitVec {
    type Output = BitVec;

    fn bitxor(self, rhs: &BitVec) -> BitVec {
        let mut out = self.clone();
        out.xor_assign(rhs);
        out
    }
}

impl std::ops::BitXorAssign<&BitVec> for BitVec {
    fn bitxor_assign(&mut self, rhs: &BitVec) {
        self.xor_assign(rhs);
    }
}
