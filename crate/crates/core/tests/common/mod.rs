#![allow(dead_code)]

use std::path::PathBuf;

use ocws::{parse_code_file, Graph, OcwsCode};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

pub fn load_fixture(name: &str) -> OcwsCode {
    parse_code_file(&std::fs::read_to_string(fixture(name)).unwrap()).unwrap()
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut rows = vec![0u64; n];
    for a in 0..n {
        for b in (a + 1)..n {
            if rng.random_bool(p) {
                rows[a] |= 1 << b;
                rows[b] |= 1 << a;
            }
        }
    }
    Graph::from_rows(rows).unwrap()
}

/// Random graph, gauge count and `k` distinct words (zero word included
/// with probability one half).
pub fn random_code(rng: &mut impl Rng, n: usize, max_r: usize, max_k: usize) -> OcwsCode {
    let graph = random_graph(rng, n, 0.5);
    let r = rng.random_range(0..=max_r.min(n - 1));
    let s = n - r;
    let mut pool: Vec<u64> = (1..1u64 << s).collect();
    pool.shuffle(rng);
    let k = rng.random_range(1..=max_k.min(pool.len()));
    let mut words: Vec<u64> = pool.into_iter().take(k).collect();
    if rng.random_bool(0.5) {
        words[0] = 0;
    }
    OcwsCode::new(graph, r, words, None).unwrap()
}
