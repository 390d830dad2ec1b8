//! Simple undirected graphs and the standard-form generators `S_i = X_i Z^{r_i}`
//! of their graph states.

use crate::bits::{format_bits, low_mask};
use crate::error::{Error, Result};
use crate::pauli::PauliOperator;
use crate::MAX_QUBITS;

/// Dense adjacency over GF(2); row `i` packed into a `u64` (bit `j` = edge `i-j`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    rows: Vec<u64>,
}

impl Graph {
    /// Vertices `0..n` in a closed loop.
    pub fn ring(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::RingTooSmall(n));
        }
        if n > MAX_QUBITS {
            return Err(Error::QubitCount(n));
        }
        let rows = (0..n)
            .map(|i| (1u64 << ((i + 1) % n)) | (1u64 << ((i + n - 1) % n)))
            .collect();
        Ok(Self { rows })
    }

    pub fn edgeless(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_QUBITS {
            return Err(Error::QubitCount(n));
        }
        Ok(Self { rows: vec![0; n] })
    }

    /// Validates a square, symmetric, zero-diagonal boolean matrix.
    pub fn from_adjacency<R: AsRef<[bool]>>(rows: &[R]) -> Result<Self> {
        let n = rows.len();
        if n == 0 || n > MAX_QUBITS {
            return Err(Error::QubitCount(n));
        }
        let mut packed = vec![0u64; n];
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != n {
                return Err(Error::NotSquare {
                    row: i + 1,
                    len: row.len(),
                    n,
                });
            }
            for (j, &bit) in row.iter().enumerate() {
                if bit {
                    packed[i] |= 1 << j;
                }
            }
        }
        Self::from_rows(packed)
    }

    /// Same as [`Graph::from_adjacency`] with rows already packed.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        if n == 0 || n > MAX_QUBITS {
            return Err(Error::QubitCount(n));
        }
        let mask = low_mask(n);
        for (i, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                return Err(Error::NotSquare {
                    row: i + 1,
                    len: 64 - row.leading_zeros() as usize,
                    n,
                });
            }
            if row >> i & 1 == 1 {
                return Err(Error::NonzeroDiagonal { index: i + 1 });
            }
        }
        for i in 0..n {
            for j in 0..n {
                if rows[i] >> j & 1 != rows[j] >> i & 1 {
                    return Err(Error::Asymmetric {
                        row: i + 1,
                        col: j + 1,
                    });
                }
            }
        }
        Ok(Self { rows })
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    /// Row `r_i` (0-based `i`).
    #[inline]
    pub fn row(&self, i: usize) -> u64 {
        self.rows[i]
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.rows[i] >> j & 1 == 1
    }

    pub fn degree(&self, i: usize) -> usize {
        self.rows[i].count_ones() as usize
    }

    /// Edges `(i, j)` with `i < j`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |i| {
            ((i + 1)..self.n())
                .filter(move |&j| self.has_edge(i, j))
                .map(move |j| (i, j))
        })
    }

    pub fn is_ring(&self) -> bool {
        self.n() >= 3 && Graph::ring(self.n()).is_ok_and(|g| g == *self)
    }

    /// `S_i = X_i Z^{r_i}` for 0-based `i`.
    pub fn stabilizer_generator(&self, i: usize) -> Result<PauliOperator> {
        if i >= self.n() {
            return Err(Error::QubitOutOfRange {
                index: i,
                n: self.n(),
            });
        }
        PauliOperator::new(self.n(), 1 << i, self.rows[i])
    }

    pub fn stabilizer_generators(&self) -> Vec<PauliOperator> {
        (0..self.n())
            .map(|i| PauliOperator::from_raw(self.n(), 1 << i, self.rows[i]))
            .collect()
    }

    /// Rows as `{0,1}` strings, the adjacency block of the code-file format.
    pub fn adjacency_lines(&self) -> Vec<String> {
        self.rows
            .iter()
            .map(|&r| format_bits(r, self.n()))
            .collect()
    }
}
