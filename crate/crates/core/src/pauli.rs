//! n-qubit Pauli operators in binary symplectic form, modulo global phase.
//!
//! An operator is the pair `(x, z)` of bit vectors; `Y` sets both bits. Two
//! operators are equal iff their pairs are equal, so `XZ`, `ZX` and `Y` on
//! the same qubit all compare equal.

use std::fmt;
use std::str::FromStr;

use crate::bits::{low_mask, parity};
use crate::error::{Error, Result};
use crate::MAX_QUBITS;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PauliLetter {
    I,
    X,
    Y,
    Z,
}

impl PauliLetter {
    pub fn as_char(self) -> char {
        match self {
            PauliLetter::I => 'I',
            PauliLetter::X => 'X',
            PauliLetter::Y => 'Y',
            PauliLetter::Z => 'Z',
        }
    }

    /// `(x, z)` bits of the letter.
    pub fn bits(self) -> (bool, bool) {
        match self {
            PauliLetter::I => (false, false),
            PauliLetter::X => (true, false),
            PauliLetter::Y => (true, true),
            PauliLetter::Z => (false, true),
        }
    }

    fn from_bits(x: bool, z: bool) -> Self {
        match (x, z) {
            (false, false) => PauliLetter::I,
            (true, false) => PauliLetter::X,
            (true, true) => PauliLetter::Y,
            (false, true) => PauliLetter::Z,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PauliOperator {
    n: usize,
    x: u64,
    z: u64,
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 || n > MAX_QUBITS {
        Err(Error::QubitCount(n))
    } else {
        Ok(())
    }
}

impl PauliOperator {
    pub fn new(n: usize, x: u64, z: u64) -> Result<Self> {
        check_n(n)?;
        let mask = low_mask(n);
        if x & !mask != 0 {
            return Err(Error::BitsOutOfRange { bits: x, n });
        }
        if z & !mask != 0 {
            return Err(Error::BitsOutOfRange { bits: z, n });
        }
        Ok(Self { n, x, z })
    }

    pub(crate) fn from_raw(n: usize, x: u64, z: u64) -> Self {
        debug_assert!((1..=MAX_QUBITS).contains(&n));
        debug_assert_eq!((x | z) & !low_mask(n), 0);
        Self { n, x, z }
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::new(n, 0, 0)
    }

    /// `letter` on the 0-based `qubit`, identity elsewhere.
    pub fn single(n: usize, qubit: usize, letter: PauliLetter) -> Result<Self> {
        check_n(n)?;
        if qubit >= n {
            return Err(Error::QubitOutOfRange { index: qubit, n });
        }
        let (x, z) = letter.bits();
        Ok(Self {
            n,
            x: (x as u64) << qubit,
            z: (z as u64) << qubit,
        })
    }

    /// The Z-type operator `Z^v`.
    pub fn z_type(n: usize, v: u64) -> Result<Self> {
        Self::new(n, 0, v)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn x(&self) -> u64 {
        self.x
    }

    pub fn z(&self) -> u64 {
        self.z
    }

    pub fn is_identity(&self) -> bool {
        self.x == 0 && self.z == 0
    }

    pub fn letter(&self, qubit: usize) -> PauliLetter {
        PauliLetter::from_bits(self.x >> qubit & 1 == 1, self.z >> qubit & 1 == 1)
    }

    pub fn weight(&self) -> usize {
        (self.x | self.z).count_ones() as usize
    }

    fn same_size(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            Err(Error::LengthMismatch {
                left: self.n,
                right: other.n,
            })
        } else {
            Ok(())
        }
    }

    /// Product up to phase.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.same_size(other)?;
        Ok(Self {
            n: self.n,
            x: self.x ^ other.x,
            z: self.z ^ other.z,
        })
    }

    /// Symplectic form: `x_a . z_b + z_a . x_b == 0 (mod 2)`.
    pub fn commutes(&self, other: &Self) -> Result<bool> {
        self.same_size(other)?;
        Ok(!parity((self.x & other.z) ^ (self.z & other.x)))
    }
}

impl fmt::Display for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for q in 0..self.n {
            write!(f, "{}", self.letter(q).as_char())?;
        }
        Ok(())
    }
}

impl FromStr for PauliOperator {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let n = text.chars().count();
        if n == 0 {
            return Err(Error::EmptyPauli);
        }
        check_n(n)?;
        let (mut x, mut z) = (0u64, 0u64);
        for (q, ch) in text.chars().enumerate() {
            let letter = match ch {
                'I' => PauliLetter::I,
                'X' => PauliLetter::X,
                'Y' => PauliLetter::Y,
                'Z' => PauliLetter::Z,
                _ => {
                    return Err(Error::InvalidPauliChar {
                        ch,
                        position: q + 1,
                    })
                }
            };
            let (xb, zb) = letter.bits();
            x |= (xb as u64) << q;
            z |= (zb as u64) << q;
        }
        Ok(Self { n, x, z })
    }
}

pub fn parse_pauli(text: &str) -> Result<PauliOperator> {
    text.parse()
}

pub fn format_pauli(p: &PauliOperator) -> String {
    p.to_string()
}
