//! Operator codeword-stabilized (OCWS) quantum codes over graph states.
//!
//! A code is a graph `G` on `n` qubits, a number `r` of gauge qubits placed
//! on the last positions, and a set of Z-type word operators supported on the
//! first `s = n - r` qubits. The crate builds such codes, maps Pauli errors to
//! classical errors, certifies detection/correction and distance, searches for
//! word sets with a clique solver, and cross-checks everything against a dense
//! state-vector computation.

pub mod bits;
pub mod cli;
pub mod clique;
pub mod code;
pub mod codefile;
mod error;
pub mod graph;
pub mod induce;
pub mod oracle;
pub mod pauli;
pub mod search;
pub mod verify;

pub use code::{GaugeDecomposition, GaugeGroup, OcwsCode};
pub use codefile::{parse_code_file, write_code_file};
pub use error::{Error, Result};
pub use graph::Graph;
pub use induce::{enumerate_paulis, gauge_reduce, induce, induced_error_set, InducedError};
pub use oracle::{
    build_graph_state, codeword_basis, codeword_basis_from, oqec_check, oqec_check_with_basis,
    DenseState, OqecCheckReport,
};
pub use pauli::{format_pauli, parse_pauli, PauliLetter, PauliOperator};
pub use search::{
    candidate_words, search_code, CompatibilityRule, SearchConfig, SearchMode, SearchOutcome,
};
pub use verify::{
    certify_distance, classical_route_corrects, corrects_weight, detects, detects_set,
    DetectionReport,
};

/// Largest supported qubit count (one machine word per bit vector).
pub const MAX_QUBITS: usize = 64;
