//! Dense state-vector cross-check.
//!
//! Qubit `q` is bit `q` of the basis index. Pauli operators act by index
//! permutation and phase, never as matrices.

use std::collections::HashMap;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::bits::low_mask;
use crate::code::OcwsCode;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pauli::PauliOperator;

/// Largest qubit count the oracle will allocate for.
pub const MAX_DENSE_QUBITS: usize = 14;

const GRAPH_STATE_TOL: f64 = 1e-12;
const ORTHONORMAL_TOL: f64 = 1e-10;
pub const DEFAULT_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct DenseState {
    n: usize,
    amplitudes: Vec<Complex64>,
}

impl DenseState {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    /// `<self|other>`.
    pub fn inner(&self, other: &DenseState) -> Complex64 {
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes
            .iter()
            .map(|a| a.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// `p|self>`, with `Y = iXZ` on each qubit.
    pub fn apply(&self, p: &PauliOperator) -> Result<DenseState> {
        if p.n() != self.n {
            return Err(Error::LengthMismatch {
                left: p.n(),
                right: self.n,
            });
        }
        Ok(self.apply_bits(p.x(), p.z()))
    }

    fn apply_bits(&self, x: u64, z: u64) -> DenseState {
        let phase = match (x & z).count_ones() % 4 {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        };
        let mut out = vec![Complex64::new(0.0, 0.0); self.amplitudes.len()];
        for (i, &a) in self.amplitudes.iter().enumerate() {
            let sign = if (z & i as u64).count_ones() % 2 == 1 {
                -phase
            } else {
                phase
            };
            out[i ^ x as usize] = sign * a;
        }
        DenseState {
            n: self.n,
            amplitudes: out,
        }
    }

    fn distance(&self, other: &DenseState) -> f64 {
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<f64>()
            .sqrt()
    }
}

fn check_size(n: usize) -> Result<()> {
    if n > MAX_DENSE_QUBITS {
        return Err(Error::TooLarge {
            what: "qubits for the dense oracle",
            value: n,
            limit: MAX_DENSE_QUBITS,
        });
    }
    Ok(())
}

/// Uniform superposition with a controlled phase on every edge, checked to
/// be fixed by every stabilizer generator.
pub fn build_graph_state(graph: &Graph) -> Result<DenseState> {
    let n = graph.n();
    check_size(n)?;
    let dim = 1usize << n;
    let scale = 1.0 / (dim as f64).sqrt();
    let amplitudes = (0..dim as u64)
        .map(|i| {
            let mut edges = 0u32;
            for q in 0..n {
                if i >> q & 1 == 1 {
                    edges += (graph.row(q) & i & !low_mask(q + 1)).count_ones();
                }
            }
            Complex64::new(
                if edges.is_multiple_of(2) {
                    scale
                } else {
                    -scale
                },
                0.0,
            )
        })
        .collect();
    let state = DenseState { n, amplitudes };
    for (i, s) in graph.stabilizer_generators().iter().enumerate() {
        let residual = state.apply(s)?.distance(&state);
        if residual > GRAPH_STATE_TOL {
            return Err(Error::GraphStateCheck {
                generator: i + 1,
                residual,
            });
        }
    }
    Ok(state)
}

/// `Z^{c_l} Z^{b}|G>` for every word `l` and gauge pattern `b` (bit `j` of `b`
/// on gauge qubit `s + j`), ordered by `l` then `b`.
pub fn codeword_basis(code: &OcwsCode) -> Result<Vec<DenseState>> {
    check_size(code.n())?;
    let base = build_graph_state(code.graph())?;
    codeword_basis_from(code, &base)
}

/// As [`codeword_basis`] with an explicit base state in place of `|G>`.
pub fn codeword_basis_from(code: &OcwsCode, base: &DenseState) -> Result<Vec<DenseState>> {
    if base.n() != code.n() {
        return Err(Error::LengthMismatch {
            left: base.n(),
            right: code.n(),
        });
    }
    let s = code.s();
    let patterns = 1u64 << code.r();
    let basis: Vec<DenseState> = code
        .words()
        .iter()
        .flat_map(|&c| (0..patterns).map(move |b| c | b << s))
        .map(|z| base.apply_bits(0, z))
        .collect();
    for a in 0..basis.len() {
        for b in a..basis.len() {
            let expected = if a == b { 1.0 } else { 0.0 };
            let deviation = (basis[a].inner(&basis[b]) - expected).norm();
            if deviation > ORTHONORMAL_TOL {
                return Err(Error::NotOrthonormal { a, b, deviation });
            }
        }
    }
    Ok(basis)
}

#[derive(Debug, Clone, PartialEq)]
pub struct OqecCheckReport {
    /// Largest `|<i,b|E_a E_b|j,b'>|` over `i != j`.
    pub max_off_block: f64,
    /// Largest Frobenius distance between the gauge block of word `i` and
    /// that of word 0.
    pub max_block_deviation: f64,
    pub tolerance: f64,
    pub pass: bool,
    /// Error pair attaining the larger residual, if any is nonzero.
    pub worst_pair: Option<(PauliOperator, PauliOperator)>,
}

struct ProductResidual {
    off_block: f64,
    deviation: f64,
}

fn product_residual(
    basis: &[DenseState],
    words: usize,
    block: usize,
    x: u64,
    z: u64,
) -> ProductResidual {
    let moved: Vec<DenseState> = basis.iter().map(|v| v.apply_bits(x, z)).collect();
    let entry = |a: usize, b: usize| basis[a].inner(&moved[b]);
    let mut off_block = 0f64;
    for i in 0..words {
        for j in 0..words {
            if i == j {
                continue;
            }
            for a in 0..block {
                for b in 0..block {
                    off_block = off_block.max(entry(i * block + a, j * block + b).norm());
                }
            }
        }
    }
    let reference: Vec<Complex64> = (0..block * block)
        .map(|k| entry(k / block, k % block))
        .collect();
    let mut deviation = 0f64;
    for i in 1..words {
        let frobenius: f64 = (0..block * block)
            .map(|k| {
                (entry(i * block + k / block, i * block + k % block) - reference[k]).norm_sqr()
            })
            .sum::<f64>()
            .sqrt();
        deviation = deviation.max(frobenius);
    }
    ProductResidual {
        off_block,
        deviation,
    }
}

/// Tests `P E_a E_b P = I (x) g_ab` on the codeword basis for every ordered
/// pair from `errors`. Products that agree up to phase are evaluated once.
pub fn oqec_check(code: &OcwsCode, errors: &[PauliOperator], tol: f64) -> Result<OqecCheckReport> {
    let basis = codeword_basis(code)?;
    oqec_check_with_basis(code, &basis, errors, tol)
}

/// [`oqec_check`] against a precomputed basis.
pub fn oqec_check_with_basis(
    code: &OcwsCode,
    basis: &[DenseState],
    errors: &[PauliOperator],
    tol: f64,
) -> Result<OqecCheckReport> {
    let mut products: Vec<(u64, u64)> = Vec::new();
    let mut first_pair: HashMap<(u64, u64), (usize, usize)> = HashMap::new();
    for (a, ea) in errors.iter().enumerate() {
        for (b, eb) in errors.iter().enumerate() {
            let p = ea.multiply(eb)?;
            if p.n() != code.n() {
                return Err(Error::LengthMismatch {
                    left: p.n(),
                    right: code.n(),
                });
            }
            first_pair.entry((p.x(), p.z())).or_insert_with(|| {
                products.push((p.x(), p.z()));
                (a, b)
            });
        }
    }
    let words = code.dimension();
    let block = 1usize << code.r();
    let residuals: Vec<ProductResidual> = products
        .par_iter()
        .map(|&(x, z)| product_residual(basis, words, block, x, z))
        .collect();

    let (mut max_off_block, mut max_block_deviation) = (0f64, 0f64);
    let (mut worst, mut worst_value) = (None, 0f64);
    for (key, r) in products.iter().zip(&residuals) {
        max_off_block = max_off_block.max(r.off_block);
        max_block_deviation = max_block_deviation.max(r.deviation);
        let value = r.off_block.max(r.deviation);
        if value > worst_value {
            worst_value = value;
            worst = Some(first_pair[key]);
        }
    }
    Ok(OqecCheckReport {
        max_off_block,
        max_block_deviation,
        tolerance: tol,
        pass: max_off_block <= tol && max_block_deviation <= tol,
        worst_pair: worst
            .filter(|_| worst_value > tol)
            .map(|(a, b)| (errors[a], errors[b])),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bits::parse_bits;
    use crate::induce::enumerate_paulis;

    fn ring_code(n: usize, r: usize, words: &[&str]) -> OcwsCode {
        let words = words.iter().map(|w| parse_bits(w).unwrap().0).collect();
        OcwsCode::new(Graph::ring(n).unwrap(), r, words, None).unwrap()
    }

    fn close(a: Complex64, re: f64, im: f64) -> bool {
        (a - Complex64::new(re, im)).norm() < 1e-12
    }

    #[test]
    fn small_graph_states() {
        let edge = Graph::from_rows(vec![0b10, 0b01]).unwrap();
        let g = build_graph_state(&edge).unwrap();
        let amps = g.amplitudes();
        assert!(close(amps[0], 0.5, 0.0) && close(amps[1], 0.5, 0.0));
        assert!(close(amps[2], 0.5, 0.0) && close(amps[3], -0.5, 0.0));

        let single = build_graph_state(&Graph::edgeless(1).unwrap()).unwrap();
        let h = std::f64::consts::FRAC_1_SQRT_2;
        assert!(close(single.amplitudes()[0], h, 0.0) && close(single.amplitudes()[1], h, 0.0));

        let ring5 = build_graph_state(&Graph::ring(5).unwrap()).unwrap();
        for s in Graph::ring(5).unwrap().stabilizer_generators() {
            assert!(close(ring5.inner(&ring5.apply(&s).unwrap()), 1.0, 0.0));
        }
        assert!(build_graph_state(&Graph::ring(15).unwrap()).is_err());
    }

    #[test]
    fn pauli_application_matches_letters() {
        let zero = DenseState {
            n: 1,
            amplitudes: vec![Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)],
        };
        let y = zero.apply(&"Y".parse().unwrap()).unwrap();
        assert!(close(y.amplitudes()[1], 0.0, 1.0));
        let one = zero.apply(&"X".parse().unwrap()).unwrap();
        let z = one.apply(&"Z".parse().unwrap()).unwrap();
        assert!(close(z.amplitudes()[1], -1.0, 0.0));
        let y1 = one.apply(&"Y".parse().unwrap()).unwrap();
        assert!(close(y1.amplitudes()[0], 0.0, -1.0));
    }

    #[test]
    fn basis_sizes() {
        assert_eq!(
            codeword_basis(&ring_code(8, 1, &["00000000", "01100110"]))
                .unwrap()
                .len(),
            4
        );
        let single = codeword_basis(&ring_code(5, 0, &["00000"])).unwrap();
        assert_eq!(
            single[0],
            build_graph_state(&Graph::ring(5).unwrap()).unwrap()
        );
        let words9 = [
            "000000000",
            "010011010",
            "011111000",
            "100101110",
            "101001100",
            "110110100",
            "111010110",
            "001100010",
        ];
        assert_eq!(codeword_basis(&ring_code(9, 1, &words9)).unwrap().len(), 16);
    }

    #[test]
    fn identity_only_passes() {
        let code = ring_code(8, 1, &["00000000", "01100110"]);
        let report =
            oqec_check(&code, &[PauliOperator::identity(8).unwrap()], DEFAULT_TOL).unwrap();
        assert!(report.pass);
        assert_eq!(report.max_off_block, 0.0);
        assert!(report.worst_pair.is_none());
    }

    #[test]
    fn toy_code_fails_on_z1() {
        let code = ring_code(5, 2, &["00000", "10000"]);
        let errors = [
            PauliOperator::identity(5).unwrap(),
            "ZIIII".parse().unwrap(),
        ];
        let report = oqec_check(&code, &errors, DEFAULT_TOL).unwrap();
        assert!(!report.pass);
        assert!((report.max_off_block - 1.0).abs() < 1e-9);
    }

    #[test]
    fn searched_ring8_code_passes_and_reference_one_does_not() {
        let errors: Vec<PauliOperator> = enumerate_paulis(8, 1, true).collect();
        let good = oqec_check(
            &ring_code(8, 1, &["00000000", "01111100"]),
            &errors,
            DEFAULT_TOL,
        )
        .unwrap();
        assert!(good.pass, "{good:?}");
        let reference = oqec_check(
            &ring_code(8, 1, &["00000000", "01100110"]),
            &errors,
            DEFAULT_TOL,
        )
        .unwrap();
        assert!(!reference.pass);
        assert!(reference.max_off_block < 1e-9);
        assert!((reference.max_block_deviation - 2.0 * 2f64.sqrt()).abs() < 1e-9);
    }
}
