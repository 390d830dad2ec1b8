//! Detectability, correctability and distance of OCWS codes.
//!
//! An error `E` is detected when
//!
//! * for every ordered pair of distinct words, `w_i E w_j` is not in the
//!   gauge group (up to phase), and
//! * if `E` is itself in the gauge group, it commutes with either every word
//!   operator or with none of them, so that it acts on every logical state
//!   by the same operator on the gauge subsystem.
//!
//! [`detects`] evaluates these with gauge-group membership tests on the
//! actual products. [`classical_route_corrects`] answers the correction
//! question from the induced classical errors alone; the two must agree.

use std::collections::{HashMap, HashSet};
use std::fmt;

use rayon::prelude::*;

use crate::bits::{format_bits, parity};
use crate::code::{GaugeDecomposition, OcwsCode};
use crate::error::{Error, Result};
use crate::induce::{enumerate_paulis, gauge_reduce, induce_bits, induced_error_set};
use crate::pauli::PauliOperator;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FailureKind {
    /// `w_i E w_j` lies in the gauge group; indices are 0-based.
    OffDiagonal {
        i: usize,
        j: usize,
        decomposition: GaugeDecomposition,
    },
    /// `E` is a gauge element that commutes with word 0 but not with `word`
    /// (or the reverse), so it acts differently on different logical states.
    Diagonal { word: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DetectionFailure {
    pub error: PauliOperator,
    pub kind: FailureKind,
}

impl fmt::Display for DetectionFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            FailureKind::OffDiagonal {
                i,
                j,
                decomposition,
            } => write!(
                f,
                "{} offdiagonal i={} j={} gauge={}",
                self.error,
                i + 1,
                j + 1,
                decomposition
            ),
            FailureKind::Diagonal { word } => {
                write!(
                    f,
                    "{} diagonal word={} (gauge element acting as a logical sign)",
                    self.error,
                    word + 1
                )
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DetectionReport {
    pub checked: usize,
    /// In enumeration order of the input.
    pub failures: Vec<DetectionFailure>,
}

impl DetectionReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn check_len(code: &OcwsCode, e: &PauliOperator) -> Result<()> {
    if e.n() != code.n() {
        Err(Error::LengthMismatch {
            left: e.n(),
            right: code.n(),
        })
    } else {
        Ok(())
    }
}

/// Precomputed gauge-group residues of the word operators. `w_i E w_j` is a
/// gauge element iff `residue(w_i) ^ residue(w_j) == residue(E)`.
pub struct Detector<'a> {
    code: &'a OcwsCode,
    word_residues: Vec<u128>,
    by_residue: HashMap<u128, usize>,
}

impl<'a> Detector<'a> {
    pub fn new(code: &'a OcwsCode) -> Self {
        let group = code.gauge_group();
        let word_residues: Vec<u128> = (0..code.dimension())
            .map(|l| {
                group
                    .residue(&code.word_operator(l))
                    .expect("word length matches")
            })
            .collect();
        let by_residue = word_residues
            .iter()
            .enumerate()
            .map(|(l, &r)| (r, l))
            .collect();
        Self {
            code,
            word_residues,
            by_residue,
        }
    }

    /// First failing clause for `e` in `(i, j)` order, or `None` if detected.
    pub fn failure(&self, e: &PauliOperator) -> Result<Option<FailureKind>> {
        let code = self.code;
        check_len(code, e)?;
        let group = code.gauge_group();
        let residue = group.residue(e)?;
        for (i, &wi) in self.word_residues.iter().enumerate() {
            let j = match self.by_residue.get(&(wi ^ residue)) {
                Some(&j) if j != i => j,
                _ => continue,
            };
            let product = code
                .word_operator(i)
                .multiply(e)?
                .multiply(&code.word_operator(j))?;
            let decomposition = group
                .decompose(&product)?
                .expect("residues agree, so the product is a gauge element");
            return Ok(Some(FailureKind::OffDiagonal {
                i,
                j,
                decomposition,
            }));
        }
        if residue == 0 {
            let reference = code.word_operator(0).commutes(e)?;
            for l in 1..code.dimension() {
                if code.word_operator(l).commutes(e)? != reference {
                    return Ok(Some(FailureKind::Diagonal { word: l }));
                }
            }
        }
        Ok(None)
    }
}

/// First failing clause for `e`, or `None` if `e` is detected.
pub fn detection_failure(code: &OcwsCode, e: &PauliOperator) -> Result<Option<FailureKind>> {
    Detector::new(code).failure(e)
}

/// Straight from the definition: a membership test for every ordered pair.
/// Quadratic in K; kept as the reference the fast path is checked against.
pub fn detection_failure_pairwise(
    code: &OcwsCode,
    e: &PauliOperator,
) -> Result<Option<FailureKind>> {
    check_len(code, e)?;
    let group = code.gauge_group();
    let k = code.dimension();
    for i in 0..k {
        for j in 0..k {
            if i == j {
                continue;
            }
            let product = code
                .word_operator(i)
                .multiply(e)?
                .multiply(&code.word_operator(j))?;
            if let Some(decomposition) = group.decompose(&product)? {
                return Ok(Some(FailureKind::OffDiagonal {
                    i,
                    j,
                    decomposition,
                }));
            }
        }
    }
    if group.contains(e)? {
        let reference = code.word_operator(0).commutes(e)?;
        for l in 1..k {
            if code.word_operator(l).commutes(e)? != reference {
                return Ok(Some(FailureKind::Diagonal { word: l }));
            }
        }
    }
    Ok(None)
}

pub fn detects(code: &OcwsCode, e: &PauliOperator) -> Result<bool> {
    Ok(detection_failure(code, e)?.is_none())
}

pub fn detects_set(code: &OcwsCode, errors: &[PauliOperator]) -> Result<DetectionReport> {
    let detector = Detector::new(code);
    let failures: Vec<Option<DetectionFailure>> = errors
        .par_iter()
        .map(|e| {
            detector
                .failure(e)
                .map(|f| f.map(|kind| DetectionFailure { error: *e, kind }))
        })
        .collect::<Result<_>>()?;
    Ok(DetectionReport {
        checked: errors.len(),
        failures: failures.into_iter().flatten().collect(),
    })
}

/// Detection over every non-identity Pauli of weight `<= max_weight`.
pub fn detects_up_to_weight(code: &OcwsCode, max_weight: usize) -> DetectionReport {
    let errors: Vec<PauliOperator> = enumerate_paulis(code.n(), max_weight, false).collect();
    detects_set(code, &errors).expect("enumerated errors match the code length")
}

/// Products `E_a E_b` of errors of weight `<= t` are exactly the Paulis of
/// weight `<= 2t`, so correction is detection of that set.
pub fn corrects_weight(code: &OcwsCode, t: usize) -> bool {
    detects_up_to_weight(code, 2 * t).passed()
}

/// The largest `d` with every non-identity Pauli of weight `< d` detected.
/// When no Pauli at all fails the result is `n + 1`.
pub fn certify_distance(code: &OcwsCode) -> usize {
    certify_distance_with_witness(code).0
}

/// Like [`certify_distance`], also returning the first undetected error.
pub fn certify_distance_with_witness(code: &OcwsCode) -> (usize, Option<DetectionFailure>) {
    let detector = Detector::new(code);
    for w in 1..=code.n() {
        let errors: Vec<PauliOperator> = enumerate_paulis(code.n(), w, false)
            .filter(|e| e.weight() == w)
            .collect();
        let first = errors
            .par_iter()
            .enumerate()
            .filter_map(|(idx, e)| {
                detector
                    .failure(e)
                    .expect("enumerated errors match the code length")
                    .map(|kind| (idx, DetectionFailure { error: *e, kind }))
            })
            .min_by_key(|(idx, _)| *idx);
        if let Some((_, failure)) = first {
            return (w, Some(failure));
        }
    }
    (code.n() + 1, None)
}

/// Commutation parity of `Z^{c_l}` with an error whose X part is `x`, packed
/// one bit per word.
fn word_parities(words: &[u64], x: u64) -> Vec<u64> {
    let mut out = vec![0u64; words.len().div_ceil(64)];
    for (l, &c) in words.iter().enumerate() {
        if parity(c & x) {
            out[l / 64] |= 1 << (l % 64);
        }
    }
    out
}

fn uniform_xor(a: &[u64], b: &[u64], k: usize) -> bool {
    let mut all_zero = true;
    let mut all_one = true;
    for l in 0..k {
        let bit = (a[l / 64] ^ b[l / 64]) >> (l % 64) & 1 == 1;
        all_zero &= !bit;
        all_one &= bit;
    }
    all_zero || all_one
}

/// Correction of all errors of weight `<= t`, decided on the classical side:
/// the word set must keep every pairwise sum of reduced induced errors away
/// from every codeword difference, and errors that share a reduced image
/// must agree, up to a global flip, on which words they anticommute with.
pub fn classical_route_corrects(code: &OcwsCode, t: usize) -> bool {
    classical_route_failure(code, t).is_none()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassicalFailure {
    /// `c_i + e_a = c_j + e_b`; indices into the words, images as bits.
    Collision {
        i: usize,
        j: usize,
        e_a: u64,
        e_b: u64,
    },
    /// Two errors with the same reduced image act differently on the words.
    Degenerate {
        a: PauliOperator,
        b: PauliOperator,
        image: u64,
    },
}

impl ClassicalFailure {
    pub fn describe(&self, n: usize) -> String {
        match self {
            ClassicalFailure::Collision { i, j, e_a, e_b } => format!(
                "collision c{} + {} = c{} + {}",
                i + 1,
                format_bits(*e_a, n),
                j + 1,
                format_bits(*e_b, n)
            ),
            ClassicalFailure::Degenerate { a, b, image } => format!(
                "degenerate {} and {} share image {}",
                a,
                b,
                format_bits(*image, n)
            ),
        }
    }
}

pub fn classical_route_failure(code: &OcwsCode, t: usize) -> Option<ClassicalFailure> {
    let n = code.n();
    let mut classes = induced_error_set(code, t);
    let identity = PauliOperator::from_raw(n, 0, 0);
    match classes.iter_mut().find(|c| c.bits == 0) {
        Some(zero) => zero.sources.insert(0, identity),
        None => classes.insert(
            0,
            crate::induce::InducedError {
                bits: 0,
                sources: vec![identity],
            },
        ),
    }

    let words = code.words();
    let mut differences = HashMap::new();
    for (i, &ci) in words.iter().enumerate() {
        for (j, &cj) in words.iter().enumerate() {
            if i != j {
                differences.entry(ci ^ cj).or_insert((i, j));
            }
        }
    }
    for a in &classes {
        for b in &classes {
            if let Some(&(i, j)) = differences.get(&(a.bits ^ b.bits)) {
                return Some(ClassicalFailure::Collision {
                    i,
                    j,
                    e_a: a.bits,
                    e_b: b.bits,
                });
            }
        }
    }

    let k = words.len();
    for class in &classes {
        let reference = &class.sources[0];
        let ref_parities = word_parities(words, reference.x());
        for other in &class.sources[1..] {
            if !uniform_xor(&ref_parities, &word_parities(words, other.x()), k) {
                return Some(ClassicalFailure::Degenerate {
                    a: *reference,
                    b: *other,
                    image: class.bits,
                });
            }
        }
    }
    None
}

/// Reduced images of all non-identity Paulis of weight `<= max_weight`; the
/// set of forbidden codeword differences for detection up to that weight.
pub fn forbidden_differences(code: &OcwsCode, max_weight: usize) -> HashSet<u64> {
    enumerate_paulis(code.n(), max_weight, false)
        .map(|e| gauge_reduce(code, induce_bits(code.graph(), e.x(), e.z())))
        .collect()
}
