use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong while building, reading or checking a code.
///
/// Qubit and word positions carried in messages are 1-based, matching the
/// Pauli-string and code-file notation.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("empty Pauli string")]
    EmptyPauli,
    #[error("invalid character {ch:?} at position {position} (expected one of I, X, Y, Z)")]
    InvalidPauliChar { ch: char, position: usize },
    #[error("invalid character {ch:?} at position {position} of bit string {text:?}")]
    InvalidBitChar {
        ch: char,
        position: usize,
        text: String,
    },
    #[error("qubit count {0} unsupported (must be between 1 and {max})", max = crate::MAX_QUBITS)]
    QubitCount(usize),
    #[error("length mismatch: {left} vs {right} qubits")]
    LengthMismatch { left: usize, right: usize },
    #[error("qubit index {index} out of range for {n} qubits")]
    QubitOutOfRange { index: usize, n: usize },
    #[error("bit pattern {bits:#x} does not fit in {n} qubits")]
    BitsOutOfRange { bits: u64, n: usize },

    #[error("ring graph needs at least 3 vertices, got {0}")]
    RingTooSmall(usize),
    #[error("adjacency matrix is not square: row {row} has {len} entries, expected {n}")]
    NotSquare { row: usize, len: usize, n: usize },
    #[error("adjacency matrix asymmetric at ({row},{col})")]
    Asymmetric { row: usize, col: usize },
    #[error("adjacency matrix has nonzero diagonal at ({index},{index})")]
    NonzeroDiagonal { index: usize },

    #[error("gauge qubit count r={r} out of range for n={n} (need 0 <= r < n)")]
    GaugeCount { r: usize, n: usize },
    #[error("a code needs at least one word operator")]
    NoWords,
    #[error("word {word} ({bits}) acts on gauge qubit {qubit}")]
    WordOnGauge {
        word: usize,
        bits: String,
        qubit: usize,
    },
    #[error("word {word} duplicates word {first} ({bits})")]
    DuplicateWord {
        word: usize,
        first: usize,
        bits: String,
    },
    #[error("claimed distance must be positive")]
    ZeroDistance,

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{what} too large: {value} (limit {limit})")]
    TooLarge {
        what: &'static str,
        value: usize,
        limit: usize,
    },
    #[error("codeword basis is not orthonormal: |<{a}|{b}> - delta| = {deviation:e}")]
    NotOrthonormal { a: usize, b: usize, deviation: f64 },
    #[error("graph state fails stabilizer check for S_{generator}: residual {residual:e}")]
    GraphStateCheck { generator: usize, residual: f64 },

    #[error("search found K={best_k}, below the requested K={target_k}")]
    TargetNotMet { best_k: usize, target_k: usize },
    #[error("search produced a code that fails re-verification: certified d={certified} < target d={target}")]
    Unverified { certified: usize, target: usize },
    #[error("invalid search configuration: {0}")]
    SearchConfig(String),
}
