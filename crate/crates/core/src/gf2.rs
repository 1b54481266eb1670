//! Bit-packed linear algebra over GF(2).
//!
//! Every row of a [`BitMatrix`] lives in a single `u64`: bit `j` of row `i`
//! is the entry `(i, j)`. Both dimensions are capped at 64, which covers
//! every instance this crate is meant for and keeps elimination word-level.

use std::fmt;

use crate::error::{Error, Result};

pub const MAX_DIM: usize = 64;

#[inline]
pub(crate) fn low_mask(bits: usize) -> u64 {
    if bits >= 64 {
        u64::MAX
    } else {
        (1u64 << bits) - 1
    }
}

/// A dense matrix over GF(2) with at most 64 rows and 64 columns.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Result<Self> {
        check_dims(rows, cols)?;
        Ok(BitMatrix { rows, cols, data: vec![0; rows] })
    }

    pub fn identity(n: usize) -> Result<Self> {
        let mut m = Self::zeros(n, n)?;
        for i in 0..n {
            m.data[i] = 1 << i;
        }
        Ok(m)
    }

    /// Builds a matrix from packed rows. Bits at or beyond `cols` must be clear.
    pub fn from_rows(cols: usize, rows: Vec<u64>) -> Result<Self> {
        check_dims(rows.len(), cols)?;
        let mask = low_mask(cols);
        if let Some(bad) = rows.iter().position(|r| r & !mask != 0) {
            return Err(Error::DimensionMismatch { expected: cols, found: 64 - rows[bad].leading_zeros() as usize });
        }
        Ok(BitMatrix { rows: rows.len(), cols, data: rows })
    }

    /// Builds a matrix whose column `j` is the bit-vector `columns[j]` (bit `i` = row `i`).
    pub fn from_columns(rows: usize, columns: &[u64]) -> Result<Self> {
        check_dims(rows, columns.len())?;
        let mask = low_mask(rows);
        if let Some(bad) = columns.iter().position(|c| c & !mask != 0) {
            return Err(Error::DimensionMismatch { expected: rows, found: 64 - columns[bad].leading_zeros() as usize });
        }
        let mut data = vec![0u64; rows];
        for (j, &c) in columns.iter().enumerate() {
            let mut bits = c;
            while bits != 0 {
                let i = bits.trailing_zeros() as usize;
                data[i] |= 1 << j;
                bits &= bits - 1;
            }
        }
        Ok(BitMatrix { rows, cols: columns.len(), data })
    }

    /// Parses rows written as strings of `0`/`1`, leftmost character = column 0.
    pub fn from_bit_strings<S: AsRef<str>>(rows: &[S]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len());
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != cols {
                return Err(Error::DimensionMismatch { expected: cols, found: row.len() });
            }
            data.push(
                parse_bits(row).ok_or_else(|| Error::Parse {
                    line: i + 1,
                    message: format!("row `{row}` is not a binary string"),
                })?,
            );
        }
        Self::from_rows(cols, data)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row_words(&self) -> &[u64] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        self.data[i] >> j & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        if value {
            self.data[i] |= 1 << j;
        } else {
            self.data[i] &= !(1 << j);
        }
    }

    /// Column `j` packed as a bit-vector over the rows.
    pub fn column(&self, j: usize) -> u64 {
        assert!(j < self.cols);
        self.data.iter().enumerate().fold(0u64, |acc, (i, row)| acc | ((row >> j & 1) << i))
    }

    pub fn columns(&self) -> Vec<u64> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn transpose(&self) -> BitMatrix {
        let data = self.columns();
        BitMatrix { rows: self.cols, cols: self.rows, data }
    }

    /// Matrix product over GF(2).
    pub fn mul(&self, other: &BitMatrix) -> Result<BitMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, found: other.rows });
        }
        let data = self.data.iter().map(|&row| xor_selected(&other.data, row)).collect();
        Ok(BitMatrix { rows: self.rows, cols: other.cols, data })
    }

    /// Applies the matrix to a column vector (bit `j` of `v` = entry `j`).
    pub fn apply(&self, v: u64) -> u64 {
        self.data.iter().enumerate().fold(0u64, |acc, (i, &row)| acc | (((row & v).count_ones() as u64 & 1) << i))
    }

    pub fn rank(&self) -> usize {
        rank(self)
    }

    pub fn to_bit_strings(&self) -> Vec<String> {
        self.data.iter().map(|&r| bits_to_string(r, self.cols)).collect()
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.rows, self.cols)?;
        for row in self.to_bit_strings() {
            writeln!(f, "  {row}")?;
        }
        Ok(())
    }
}

fn check_dims(rows: usize, cols: usize) -> Result<()> {
    if rows > MAX_DIM || cols > MAX_DIM {
        Err(Error::TooLarge { rows, cols })
    } else {
        Ok(())
    }
}

pub(crate) fn parse_bits(s: &str) -> Option<u64> {
    if s.len() > 64 {
        return None;
    }
    let mut v = 0u64;
    for (j, c) in s.bytes().enumerate() {
        match c {
            b'0' => {}
            b'1' => v |= 1 << j,
            _ => return None,
        }
    }
    Some(v)
}

pub(crate) fn bits_to_string(v: u64, len: usize) -> String {
    (0..len).map(|j| if v >> j & 1 == 1 { '1' } else { '0' }).collect()
}

/// XOR of the words of `vectors` selected by the bits of `mask`.
#[inline]
pub fn xor_selected(vectors: &[u64], mask: u64) -> u64 {
    let mut acc = 0;
    let mut bits = mask;
    while bits != 0 {
        acc ^= vectors[bits.trailing_zeros() as usize];
        bits &= bits - 1;
    }
    acc
}

/// Dimension of the row space of `m`.
pub fn rank(m: &BitMatrix) -> usize {
    let mut basis = XorBasis::new();
    for &row in &m.data {
        basis.insert(row);
    }
    basis.rank()
}

/// Rank of an arbitrary list of packed vectors.
pub fn rank_of_vectors<I: IntoIterator<Item = u64>>(vectors: I) -> usize {
    let mut basis = XorBasis::new();
    for v in vectors {
        basis.insert(v);
    }
    basis.rank()
}

/// Reduced row-echelon form, pivoting on the lowest free column first.
///
/// The result keeps the input's shape; zero rows collect at the bottom.
pub fn rref(m: &BitMatrix) -> (BitMatrix, Vec<usize>) {
    let mut rows = m.data.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..m.cols {
        if r == rows.len() {
            break;
        }
        let bit = 1u64 << col;
        let Some(p) = (r..rows.len()).find(|&i| rows[i] & bit != 0) else {
            continue;
        };
        rows.swap(r, p);
        let pivot_row = rows[r];
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && *row & bit != 0 {
                *row ^= pivot_row;
            }
        }
        pivots.push(col);
        r += 1;
    }
    (BitMatrix { rows: m.rows, cols: m.cols, data: rows }, pivots)
}

/// Expresses `v` (a column vector of length `m.rows()`) as a GF(2) combination
/// of the columns of `m`. Returns the coefficient mask over columns, or `None`
/// when `v` is outside the column space.
pub fn solve_membership(m: &BitMatrix, v: u64) -> Result<Option<u64>> {
    if v & !low_mask(m.rows) != 0 {
        return Err(Error::DimensionMismatch { expected: m.rows, found: 64 - v.leading_zeros() as usize });
    }
    let mut basis = TrackedBasis::new();
    for j in 0..m.cols {
        basis.insert(m.column(j), 1 << j);
    }
    Ok(basis.express(v))
}

/// Incremental row-space basis keyed by leading bit.
#[derive(Clone)]
pub struct XorBasis {
    pivots: [u64; 64],
    rank: usize,
}

impl Default for XorBasis {
    fn default() -> Self {
        Self::new()
    }
}

impl XorBasis {
    pub fn new() -> Self {
        XorBasis { pivots: [0; 64], rank: 0 }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    #[inline]
    pub fn reduce(&self, mut v: u64) -> u64 {
        while v != 0 {
            let b = 63 - v.leading_zeros() as usize;
            let p = self.pivots[b];
            if p == 0 {
                return v;
            }
            v ^= p;
        }
        0
    }

    /// Inserts `v`; returns the pivot bit it occupied, or `None` if it was dependent.
    #[inline]
    pub fn insert(&mut self, v: u64) -> Option<usize> {
        let v = self.reduce(v);
        if v == 0 {
            return None;
        }
        let b = 63 - v.leading_zeros() as usize;
        self.pivots[b] = v;
        self.rank += 1;
        Some(b)
    }

    /// Undoes an insertion that returned `Some(bit)`. Only valid in LIFO order.
    #[inline]
    pub fn remove_pivot(&mut self, bit: usize) {
        debug_assert!(self.pivots[bit] != 0);
        self.pivots[bit] = 0;
        self.rank -= 1;
    }

    #[inline]
    pub fn contains(&self, v: u64) -> bool {
        self.reduce(v) == 0
    }
}

/// A basis that remembers which input vectors each basis element is built from.
#[derive(Clone)]
pub(crate) struct TrackedBasis {
    pivots: [(u64, u64); 64],
}

impl TrackedBasis {
    pub(crate) fn new() -> Self {
        TrackedBasis { pivots: [(0, 0); 64] }
    }

    fn reduce(&self, mut v: u64, mut tag: u64) -> (u64, u64) {
        while v != 0 {
            let b = 63 - v.leading_zeros() as usize;
            let (p, t) = self.pivots[b];
            if p == 0 {
                break;
            }
            v ^= p;
            tag ^= t;
        }
        (v, tag)
    }

    pub(crate) fn insert(&mut self, v: u64, tag: u64) -> bool {
        let (v, tag) = self.reduce(v, tag);
        if v == 0 {
            return false;
        }
        self.pivots[63 - v.leading_zeros() as usize] = (v, tag);
        true
    }

    /// Combination of inserted tags that sums to `v`, if any.
    pub(crate) fn express(&self, v: u64) -> Option<u64> {
        let (rest, tag) = self.reduce(v, 0);
        (rest == 0).then_some(tag)
    }
}
