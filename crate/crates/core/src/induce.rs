//! Classical images of Pauli errors.
//!
//! A Pauli `E = Z^v X^u` on a graph state is equivalent, up to stabilizer
//! multiplication, to `Z^{v + sum_l u_l r_l}`. Multiplying further by the
//! Z-type gauge generators clears the gauge positions.

use indexmap::IndexMap;

use crate::code::OcwsCode;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pauli::{PauliLetter, PauliOperator};

/// Raw induced error of `(x, z)` on `graph`, without bounds checks.
#[inline]
pub(crate) fn induce_bits(graph: &Graph, mut x: u64, z: u64) -> u64 {
    let mut v = z;
    while x != 0 {
        let l = x.trailing_zeros() as usize;
        v ^= graph.row(l);
        x &= x - 1;
    }
    v
}

/// `Cl_G(E)`.
pub fn induce(graph: &Graph, e: &PauliOperator) -> Result<u64> {
    if e.n() != graph.n() {
        return Err(Error::LengthMismatch {
            left: e.n(),
            right: graph.n(),
        });
    }
    Ok(induce_bits(graph, e.x(), e.z()))
}

/// Clears the gauge positions `s..n`.
#[inline]
pub fn gauge_reduce(code: &OcwsCode, bits: u64) -> u64 {
    bits & code.info_mask()
}

/// Induced then gauge-reduced image of `e` under `code`.
pub fn reduced_image(code: &OcwsCode, e: &PauliOperator) -> Result<u64> {
    Ok(gauge_reduce(code, induce(code.graph(), e)?))
}

/// Number of Paulis on `n` qubits with weight at most `max_weight`.
pub fn pauli_count(n: usize, max_weight: usize, include_identity: bool) -> usize {
    let mut total = 1usize;
    let mut binom = 1usize;
    let mut pow3 = 1usize;
    for w in 1..=max_weight.min(n) {
        binom = binom * (n - w + 1) / w;
        pow3 *= 3;
        total += binom * pow3;
    }
    if include_identity {
        total
    } else {
        total - 1
    }
}

/// All Paulis of weight `<= max_weight`, ordered by weight, then by support
/// (lexicographic over qubit indices), then by letters with `X < Y < Z`
/// compared from the lowest qubit.
#[derive(Debug, Clone)]
pub struct PauliEnumerator {
    n: usize,
    max_weight: usize,
    weight: usize,
    support: Vec<usize>,
    letters: Vec<u8>,
    pending_identity: bool,
    done: bool,
}

const LETTERS: [PauliLetter; 3] = [PauliLetter::X, PauliLetter::Y, PauliLetter::Z];

impl PauliEnumerator {
    pub fn new(n: usize, max_weight: usize, include_identity: bool) -> Self {
        let max_weight = max_weight.min(n);
        let mut it = Self {
            n,
            max_weight,
            weight: 0,
            support: Vec::new(),
            letters: Vec::new(),
            pending_identity: include_identity,
            done: false,
        };
        it.start_weight(1);
        it
    }

    fn start_weight(&mut self, w: usize) {
        if w > self.max_weight || w == 0 {
            self.done = true;
            return;
        }
        self.weight = w;
        self.support = (0..w).collect();
        self.letters = vec![0; w];
    }

    fn current(&self) -> PauliOperator {
        let (mut x, mut z) = (0u64, 0u64);
        for (&q, &l) in self.support.iter().zip(&self.letters) {
            let (xb, zb) = LETTERS[l as usize].bits();
            x |= (xb as u64) << q;
            z |= (zb as u64) << q;
        }
        PauliOperator::from_raw(self.n, x, z)
    }

    fn advance(&mut self) {
        // letters: odometer with the last position fastest
        for l in self.letters.iter_mut().rev() {
            if *l < 2 {
                *l += 1;
                return;
            }
            *l = 0;
        }
        // next combination in lexicographic order
        let w = self.weight;
        let mut i = w;
        while i > 0 {
            i -= 1;
            if self.support[i] < self.n - w + i {
                self.support[i] += 1;
                for k in (i + 1)..w {
                    self.support[k] = self.support[k - 1] + 1;
                }
                return;
            }
        }
        self.start_weight(w + 1);
    }
}

impl Iterator for PauliEnumerator {
    type Item = PauliOperator;

    fn next(&mut self) -> Option<PauliOperator> {
        if self.pending_identity {
            self.pending_identity = false;
            return Some(PauliOperator::from_raw(self.n, 0, 0));
        }
        if self.done {
            return None;
        }
        let p = self.current();
        self.advance();
        Some(p)
    }
}

pub fn enumerate_paulis(n: usize, max_weight: usize, include_identity: bool) -> PauliEnumerator {
    PauliEnumerator::new(n, max_weight, include_identity)
}

/// One class of errors sharing a gauge-reduced induced image.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedError {
    pub bits: u64,
    /// In enumeration order.
    pub sources: Vec<PauliOperator>,
}

/// Distinct gauge-reduced images of all non-identity Paulis of weight
/// `<= max_weight`, in order of first appearance. The all-zero image is a
/// class like any other.
pub fn induced_error_set(code: &OcwsCode, max_weight: usize) -> Vec<InducedError> {
    let mut classes: IndexMap<u64, Vec<PauliOperator>> = IndexMap::new();
    for e in enumerate_paulis(code.n(), max_weight, false) {
        let bits = gauge_reduce(code, induce_bits(code.graph(), e.x(), e.z()));
        classes.entry(bits).or_default().push(e);
    }
    classes
        .into_iter()
        .map(|(bits, sources)| InducedError { bits, sources })
        .collect()
}
