//! The OCWS code object: a graph, the number of gauge qubits and a list of
//! Z-type word operators, plus its gauge group.
//!
//! Gauge qubits are always the last `r` positions, so `s = n - r` information
//! positions come first and every word must vanish on positions `s..n`.

use std::fmt;
use std::sync::OnceLock;

use crate::bits::{format_bits, low_mask};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pauli::PauliOperator;

pub struct OcwsCode {
    graph: Graph,
    r: usize,
    words: Vec<u64>,
    claimed_distance: Option<usize>,
    gauge: OnceLock<GaugeGroup>,
}

impl OcwsCode {
    pub fn new(
        graph: Graph,
        r: usize,
        words: Vec<u64>,
        claimed_distance: Option<usize>,
    ) -> Result<Self> {
        let n = graph.n();
        if r >= n {
            return Err(Error::GaugeCount { r, n });
        }
        if words.is_empty() {
            return Err(Error::NoWords);
        }
        if claimed_distance == Some(0) {
            return Err(Error::ZeroDistance);
        }
        let s = n - r;
        for (l, &w) in words.iter().enumerate() {
            if w & !low_mask(n) != 0 {
                return Err(Error::BitsOutOfRange { bits: w, n });
            }
            let on_gauge = w & !low_mask(s);
            if on_gauge != 0 {
                return Err(Error::WordOnGauge {
                    word: l + 1,
                    bits: format_bits(w, n),
                    qubit: on_gauge.trailing_zeros() as usize + 1,
                });
            }
            if let Some(first) = words[..l].iter().position(|&v| v == w) {
                return Err(Error::DuplicateWord {
                    word: l + 1,
                    first: first + 1,
                    bits: format_bits(w, n),
                });
            }
        }
        Ok(Self {
            graph,
            r,
            words,
            claimed_distance,
            gauge: OnceLock::new(),
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// Number of gauge qubits.
    pub fn r(&self) -> usize {
        self.r
    }

    /// Number of information positions, `n - r`.
    pub fn s(&self) -> usize {
        self.n() - self.r
    }

    /// Logical dimension K.
    pub fn dimension(&self) -> usize {
        self.words.len()
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn claimed_distance(&self) -> Option<usize> {
        self.claimed_distance
    }

    pub fn with_claimed_distance(mut self, d: Option<usize>) -> Result<Self> {
        if d == Some(0) {
            return Err(Error::ZeroDistance);
        }
        self.claimed_distance = d;
        Ok(self)
    }

    /// Positions `0..s`.
    #[inline]
    pub fn info_mask(&self) -> u64 {
        low_mask(self.s())
    }

    /// Positions `s..n`.
    #[inline]
    pub fn gauge_mask(&self) -> u64 {
        low_mask(self.n()) & !low_mask(self.s())
    }

    /// `w_l = Z^{c_l}`.
    pub fn word_operator(&self, l: usize) -> PauliOperator {
        PauliOperator::from_raw(self.n(), 0, self.words[l])
    }

    pub fn gauge_group(&self) -> &GaugeGroup {
        self.gauge
            .get_or_init(|| GaugeGroup::standard_form(&self.graph, self.r))
    }

    pub fn in_gauge_group(&self, p: &PauliOperator) -> Result<bool> {
        self.gauge_group().contains(p)
    }
}

impl Clone for OcwsCode {
    fn clone(&self) -> Self {
        Self {
            graph: self.graph.clone(),
            r: self.r,
            words: self.words.clone(),
            claimed_distance: self.claimed_distance,
            gauge: self.gauge.clone(),
        }
    }
}

impl PartialEq for OcwsCode {
    fn eq(&self, other: &Self) -> bool {
        self.graph == other.graph
            && self.r == other.r
            && self.words == other.words
            && self.claimed_distance == other.claimed_distance
    }
}

impl Eq for OcwsCode {}

impl fmt::Debug for OcwsCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let words: Vec<String> = self
            .words
            .iter()
            .map(|&w| format_bits(w, self.n()))
            .collect();
        f.debug_struct("OcwsCode")
            .field("n", &self.n())
            .field("r", &self.r)
            .field("words", &words)
            .field("claimed_distance", &self.claimed_distance)
            .finish()
    }
}

/// How an element of the gauge group is written in terms of the generators.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GaugeDecomposition {
    /// 0-based `i` of every `S_i` factor.
    pub stabilizers: Vec<usize>,
    /// 0-based `j` of every `g_j` factor.
    pub gauges: Vec<usize>,
}

impl fmt::Display for GaugeDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let factors: Vec<String> = self
            .stabilizers
            .iter()
            .map(|i| format!("S{}", i + 1))
            .chain(self.gauges.iter().map(|j| format!("g{}", j + 1)))
            .collect();
        if factors.is_empty() {
            f.write_str("I")
        } else {
            f.write_str(&factors.join("*"))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct BasisRow {
    vector: u128,
    combination: u128,
}

/// `<S_1..S_n, g_1..g_r>` with `g_j = Z_{s+j}`, together with a row-reduced
/// basis of the generators' `(x|z)` vectors. Membership is decided by
/// reducing against the basis; the basis tracks which generators were
/// combined so members can be decomposed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaugeGroup {
    n: usize,
    stabilizer_count: usize,
    generators: Vec<PauliOperator>,
    basis: Vec<BasisRow>,
}

#[inline]
fn symplectic(p: &PauliOperator) -> u128 {
    p.x() as u128 | (p.z() as u128) << 64
}

#[inline]
fn pivot(v: u128) -> u32 {
    127 - v.leading_zeros()
}

impl GaugeGroup {
    fn standard_form(graph: &Graph, r: usize) -> Self {
        let n = graph.n();
        let s = n - r;
        let mut generators = graph.stabilizer_generators();
        generators.extend((0..r).map(|j| PauliOperator::from_raw(n, 0, 1 << (s + j))));
        let mut group = Self {
            n,
            stabilizer_count: n,
            generators: Vec::with_capacity(n + r),
            basis: Vec::new(),
        };
        for g in generators {
            group.push(g);
        }
        group
    }

    fn push(&mut self, g: PauliOperator) {
        let index = self.generators.len();
        self.generators.push(g);
        let (vector, combination) = self.reduce(symplectic(&g), 1u128 << index);
        if vector == 0 {
            return;
        }
        let p = pivot(vector);
        for row in &mut self.basis {
            if row.vector >> p & 1 == 1 {
                row.vector ^= vector;
                row.combination ^= combination;
            }
        }
        self.basis.push(BasisRow {
            vector,
            combination,
        });
        self.basis
            .sort_unstable_by_key(|row| std::cmp::Reverse(row.vector));
    }

    fn reduce(&self, mut vector: u128, mut combination: u128) -> (u128, u128) {
        for row in &self.basis {
            if vector >> pivot(row.vector) & 1 == 1 {
                vector ^= row.vector;
                combination ^= row.combination;
            }
        }
        (vector, combination)
    }

    /// `S_1..S_n` followed by `g_1..g_r`.
    pub fn generators(&self) -> &[PauliOperator] {
        &self.generators
    }

    pub fn gauge_generators(&self) -> &[PauliOperator] {
        &self.generators[self.stabilizer_count..]
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// The reduced `(x|z)` basis vectors, x in the low 64 bits.
    pub fn symplectic_basis(&self) -> Vec<u128> {
        self.basis.iter().map(|r| r.vector).collect()
    }

    /// Residue of `p` after reduction against the basis; zero iff `p` is a
    /// member. Linear in `p`, so `residue(a * b) = residue(a) ^ residue(b)`.
    pub fn residue(&self, p: &PauliOperator) -> Result<u128> {
        if p.n() != self.n {
            return Err(Error::LengthMismatch {
                left: p.n(),
                right: self.n,
            });
        }
        Ok(self.reduce(symplectic(p), 0).0)
    }

    pub fn contains(&self, p: &PauliOperator) -> Result<bool> {
        Ok(self.decompose(p)?.is_some())
    }

    /// Generators whose product equals `p` up to phase, if `p` is a member.
    pub fn decompose(&self, p: &PauliOperator) -> Result<Option<GaugeDecomposition>> {
        if p.n() != self.n {
            return Err(Error::LengthMismatch {
                left: p.n(),
                right: self.n,
            });
        }
        let (rest, combination) = self.reduce(symplectic(p), 0);
        if rest != 0 {
            return Ok(None);
        }
        let mut out = GaugeDecomposition::default();
        for k in 0..self.generators.len() {
            if combination >> k & 1 == 1 {
                if k < self.stabilizer_count {
                    out.stabilizers.push(k);
                } else {
                    out.gauges.push(k - self.stabilizer_count);
                }
            }
        }
        Ok(Some(out))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::induce::{gauge_reduce, induce};
    use crate::pauli::PauliLetter;
    use proptest::prelude::*;

    fn ring_code(n: usize, r: usize, words: &[&str]) -> OcwsCode {
        let words = words
            .iter()
            .map(|w| crate::bits::parse_bits(w).unwrap().0)
            .collect();
        OcwsCode::new(Graph::ring(n).unwrap(), r, words, None).unwrap()
    }

    fn p(s: &str) -> PauliOperator {
        s.parse().unwrap()
    }

    #[test]
    fn new_code_examples() {
        let c = ring_code(8, 1, &["00000000", "01100110"]);
        assert_eq!((c.n(), c.s(), c.r(), c.dimension()), (8, 7, 1, 2));

        let err = OcwsCode::new(
            Graph::ring(9).unwrap(),
            1,
            vec![0, crate::bits::parse_bits("010010011").unwrap().0],
            None,
        )
        .unwrap_err();
        assert!(matches!(
            err,
            Error::WordOnGauge {
                word: 2,
                qubit: 9,
                ..
            }
        ));

        let k1 = ring_code(5, 2, &["00000"]);
        assert_eq!(k1.dimension(), 1);
    }

    #[test]
    fn new_code_rejections() {
        let g = Graph::ring(5).unwrap();
        assert_eq!(
            OcwsCode::new(g.clone(), 5, vec![0], None).unwrap_err(),
            Error::GaugeCount { r: 5, n: 5 }
        );
        assert_eq!(
            OcwsCode::new(g.clone(), 1, vec![], None).unwrap_err(),
            Error::NoWords
        );
        assert!(matches!(
            OcwsCode::new(g.clone(), 1, vec![3, 1, 3], None).unwrap_err(),
            Error::DuplicateWord {
                word: 3,
                first: 1,
                ..
            }
        ));
        assert_eq!(
            OcwsCode::new(g, 1, vec![0], Some(0)).unwrap_err(),
            Error::ZeroDistance
        );
    }

    #[test]
    fn gauge_generators_standard_form() {
        let c8 = ring_code(8, 1, &["00000000", "01100110"]);
        let gg = c8.gauge_group();
        assert_eq!(gg.generators().len(), 9);
        assert_eq!(gg.gauge_generators()[0].to_string(), "IIIIIIIZ");
        assert_eq!(gg.rank(), 9);

        let c5 = ring_code(5, 2, &["00000"]);
        let names: Vec<String> = c5
            .gauge_group()
            .generators()
            .iter()
            .map(|g| g.to_string())
            .collect();
        assert_eq!(
            names,
            ["XZIIZ", "ZXZII", "IZXZI", "IIZXZ", "ZIIZX", "IIIZI", "IIIIZ"]
        );

        let c0 = ring_code(6, 0, &["000000"]);
        assert_eq!(
            c0.gauge_group().generators(),
            Graph::ring(6).unwrap().stabilizer_generators().as_slice()
        );
    }

    #[test]
    fn membership_examples() {
        let c5 = ring_code(5, 2, &["00000"]);
        assert!(c5.in_gauge_group(&p("IIIZI")).unwrap());
        assert!(!c5.in_gauge_group(&p("ZIIII")).unwrap());
        assert!(c5.in_gauge_group(&p("IIIII")).unwrap());
        assert!(c5.in_gauge_group(&p("IIII")).is_err());
        let d = c5.gauge_group().decompose(&p("XZIZZ")).unwrap().unwrap();
        assert_eq!(d.to_string(), "S1*g1");
    }

    #[test]
    fn words_commute_with_gauge_partners() {
        let c = ring_code(9, 1, &["000000000", "010011010", "011111000", "100101110"]);
        let gg = c.gauge_group();
        for l in 0..c.dimension() {
            let w = c.word_operator(l);
            for j in 0..c.r() {
                assert!(w.commutes(&gg.gauge_generators()[j]).unwrap());
                assert!(w.commutes(&gg.generators()[c.s() + j]).unwrap());
            }
        }
        // A word on the gauge qubit anticommutes with S_9.
        let bad = PauliOperator::single(9, 8, PauliLetter::Z).unwrap();
        assert!(!bad.commutes(&gg.generators()[8]).unwrap());
    }

    fn arb_code_and_pauli() -> impl Strategy<Value = (Vec<u64>, usize, u64, u64)> {
        (3usize..=12).prop_flat_map(|n| {
            let pairs = n * (n - 1) / 2;
            (
                proptest::collection::vec(any::<bool>(), pairs),
                0..n,
                0..(1u64 << n),
                0..(1u64 << n),
            )
                .prop_map(move |(edges, r, x, z)| {
                    let mut rows = vec![0u64; n];
                    let mut k = 0;
                    for i in 0..n {
                        for j in (i + 1)..n {
                            if edges[k] {
                                rows[i] |= 1 << j;
                                rows[j] |= 1 << i;
                            }
                            k += 1;
                        }
                    }
                    (rows, r, x, z)
                })
        })
    }

    proptest! {
        /// Elimination agrees with the closed form "gauge-reduced induced error is zero",
        /// and membership is constant on cosets of every generator.
        #[test]
        fn membership_matches_closed_form((rows, r, x, z) in arb_code_and_pauli()) {
            let n = rows.len();
            let code = OcwsCode::new(Graph::from_rows(rows).unwrap(), r, vec![0], None).unwrap();
            let e = PauliOperator::new(n, x, z).unwrap();
            let closed = gauge_reduce(&code, induce(code.graph(), &e).unwrap()) == 0;
            let member = code.in_gauge_group(&e).unwrap();
            prop_assert_eq!(member, closed);
            prop_assert_eq!(code.gauge_group().rank(), n + r);
            for g in code.gauge_group().generators() {
                prop_assert_eq!(code.in_gauge_group(&e.multiply(g).unwrap()).unwrap(), member);
            }
            if let Some(d) = code.gauge_group().decompose(&e).unwrap() {
                let gens = code.gauge_group().generators();
                let mut acc = PauliOperator::identity(n).unwrap();
                for &i in &d.stabilizers { acc = acc.multiply(&gens[i]).unwrap(); }
                for &j in &d.gauges { acc = acc.multiply(&gens[n + j]).unwrap(); }
                prop_assert_eq!(acc, e);
            }
        }

        /// Distinct words never differ by a gauge element.
        #[test]
        fn distinct_words_not_gauge_equivalent((rows, r, a, b) in arb_code_and_pauli()) {
            let n = rows.len();
            let s = n - r;
            let (a, b) = (a & low_mask(s), b & low_mask(s));
            prop_assume!(a != b);
            let code = OcwsCode::new(Graph::from_rows(rows).unwrap(), r, vec![a, b], None).unwrap();
            let diff = PauliOperator::z_type(n, a ^ b).unwrap();
            prop_assert!(!code.in_gauge_group(&diff).unwrap());
        }
    }
}
