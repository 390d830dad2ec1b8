//! Packed GF(2) vectors of length at most 64.
//!
//! Position `i` (0-based) lives at bit `i` of a `u64`. When written out, the
//! leftmost character is position 0, i.e. qubit 1.

use crate::error::{Error, Result};

/// Mask with the low `n` bits set.
#[inline]
pub fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[inline]
pub fn parity(v: u64) -> bool {
    v.count_ones() & 1 == 1
}

/// `"0110..."` with position 0 first.
pub fn format_bits(bits: u64, n: usize) -> String {
    (0..n)
        .map(|i| if bits >> i & 1 == 1 { '1' } else { '0' })
        .collect()
}

/// Z-type Pauli string of a bit vector: `1 -> Z`, `0 -> I`.
pub fn format_zstring(bits: u64, n: usize) -> String {
    (0..n)
        .map(|i| if bits >> i & 1 == 1 { 'Z' } else { 'I' })
        .collect()
}

/// Parses a bit string over `{0,1}` or a Z-string over `{I,Z}`; returns the
/// packed value and the length.
pub fn parse_bits(text: &str) -> Result<(u64, usize)> {
    let n = text.chars().count();
    if n == 0 || n > crate::MAX_QUBITS {
        return Err(Error::QubitCount(n));
    }
    let zform = matches!(text.chars().next(), Some('I' | 'Z'));
    let mut bits = 0u64;
    for (i, ch) in text.chars().enumerate() {
        let one = match (zform, ch) {
            (false, '0') | (true, 'I') => false,
            (false, '1') | (true, 'Z') => true,
            _ => {
                return Err(Error::InvalidBitChar {
                    ch,
                    position: i + 1,
                    text: text.to_string(),
                })
            }
        };
        if one {
            bits |= 1 << i;
        }
    }
    Ok((bits, n))
}

/// Reverses the low `n` bits. Maps "lexicographic order of the written
/// string" onto plain integer order and back.
#[inline]
pub fn reverse_low(v: u64, n: usize) -> u64 {
    if n == 0 {
        0
    } else {
        v.reverse_bits() >> (64 - n)
    }
}

/// Row-reduced GF(2) span of `u64` vectors.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Span64 {
    rows: Vec<u64>,
}

impl Span64 {
    pub fn new() -> Self {
        Self::default()
    }

    /// Reduces `v` against the basis.
    pub fn reduce(&self, mut v: u64) -> u64 {
        for &row in &self.rows {
            let pivot = 63 - row.leading_zeros();
            if v >> pivot & 1 == 1 {
                v ^= row;
            }
        }
        v
    }

    /// Adds `v` to the span; returns false if it was already inside.
    pub fn insert(&mut self, v: u64) -> bool {
        let v = self.reduce(v);
        if v == 0 {
            return false;
        }
        let pivot = 63 - v.leading_zeros();
        for row in &mut self.rows {
            if *row >> pivot & 1 == 1 {
                *row ^= v;
            }
        }
        self.rows.push(v);
        self.rows.sort_unstable_by(|a, b| b.cmp(a));
        true
    }

    pub fn contains(&self, v: u64) -> bool {
        self.reduce(v) == 0
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    /// True iff `v` is orthogonal (even overlap) to every vector of the span.
    pub fn orthogonal_to(&self, v: u64) -> bool {
        self.rows.iter().all(|&row| !parity(row & v))
    }
}
