//! Word-set search.
//!
//! Two candidate words may share a code when their XOR difference avoids
//! every gauge-reduced induced error of weight `< d` and has even overlap
//! with the X part of every undetectable-by-difference (degenerate) error.
//! Both tests depend only on the difference, so the compatibility graph is
//! a Cayley graph and a maximum clique can be assumed to contain the zero
//! word: the search only needs the zero word's neighbourhood.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bits::{low_mask, reverse_low, Span64};
use crate::clique::{max_clique_exact, max_clique_greedy, CompatibilityGraph};
use crate::code::OcwsCode;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::induce::{enumerate_paulis, gauge_reduce, induce_bits};
use crate::verify::certify_distance;

/// Largest information length for which exact mode enumerates candidates.
pub const EXACT_MAX_INFO_BITS: usize = 24;
/// Largest explicit compatibility graph the solvers are given.
pub const MAX_GRAPH_VERTICES: usize = 16384;
/// Greedy restarts per search.
pub const GREEDY_RESTARTS: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    Exact,
    Greedy,
}

#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub graph: Graph,
    pub r: usize,
    pub target_distance: usize,
    pub target_k: Option<usize>,
    pub mode: SearchMode,
    pub time_budget: Option<Duration>,
    pub seed: u64,
}

impl SearchConfig {
    pub fn new(graph: Graph, r: usize, target_distance: usize) -> Self {
        Self {
            graph,
            r,
            target_distance,
            target_k: None,
            mode: SearchMode::Exact,
            time_budget: None,
            seed: 0,
        }
    }

    fn validate(&self) -> Result<()> {
        let n = self.graph.n();
        if self.r >= n {
            return Err(Error::GaugeCount { r: self.r, n });
        }
        if self.target_distance == 0 {
            return Err(Error::ZeroDistance);
        }
        let s = n - self.r;
        if self.mode == SearchMode::Exact && s > EXACT_MAX_INFO_BITS {
            return Err(Error::SearchConfig(format!(
                "exact mode enumerates 2^{s} candidates; at most 2^{EXACT_MAX_INFO_BITS} are supported, use greedy mode"
            )));
        }
        Ok(())
    }
}

/// All words supported on the information positions, in lexicographic order
/// of their written form (so the zero word comes first).
pub fn candidate_words(n: usize, r: usize) -> Result<Vec<u64>> {
    if r >= n {
        return Err(Error::GaugeCount { r, n });
    }
    let s = n - r;
    if s > EXACT_MAX_INFO_BITS {
        return Err(Error::TooLarge {
            what: "information positions",
            value: s,
            limit: EXACT_MAX_INFO_BITS,
        });
    }
    Ok((0..1u64 << s).map(|k| reverse_low(k, s)).collect())
}

/// Pair constraints on word differences for a fixed graph, gauge count and
/// error weight.
#[derive(Debug, Clone)]
pub struct CompatibilityRule {
    n: usize,
    info_mask: u64,
    forbidden: HashSet<u64>,
    degenerate: Span64,
}

impl CompatibilityRule {
    /// Constraints for detecting every non-identity Pauli of weight
    /// `<= max_weight` (use `d - 1` for a distance-`d` target).
    pub fn new(graph: &Graph, r: usize, max_weight: usize) -> Result<Self> {
        let skeleton = OcwsCode::new(graph.clone(), r, vec![0], None)?;
        let info_mask = skeleton.info_mask();
        let mut forbidden = HashSet::new();
        let mut degenerate = Span64::new();
        for e in enumerate_paulis(graph.n(), max_weight, false) {
            let image = gauge_reduce(&skeleton, induce_bits(graph, e.x(), e.z()));
            if image == 0 {
                degenerate.insert(e.x() & info_mask);
            }
            forbidden.insert(image);
        }
        Ok(Self {
            n: graph.n(),
            info_mask,
            forbidden,
            degenerate,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Gauge-reduced induced images that no word difference may equal.
    pub fn forbidden(&self) -> &HashSet<u64> {
        &self.forbidden
    }

    /// X parts (on the information positions) of errors inside the gauge
    /// group; every word difference must have even overlap with their span.
    pub fn degenerate_span(&self) -> &Span64 {
        &self.degenerate
    }

    /// Off-diagonal test: no error of the sweep maps one word onto the other
    /// up to gauge.
    pub fn compatible(&self, a: u64, b: u64) -> bool {
        !self.forbidden.contains(&((a ^ b) & self.info_mask))
    }

    /// Off-diagonal test plus equal action of every degenerate error.
    pub fn admissible(&self, a: u64, b: u64) -> bool {
        let diff = a ^ b;
        diff != 0 && self.compatible(a, b) && self.degenerate.orthogonal_to(diff)
    }
}

#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub code: OcwsCode,
    /// False when the time budget stopped the exact search early.
    pub complete: bool,
    pub certified_distance: usize,
}

/// Lexicographically least maximum clique of `vertices` under the rule,
/// with `vertices` already in lexicographic order.
fn clique_words(
    rule: &CompatibilityRule,
    vertices: &[u64],
    config: &SearchConfig,
    deadline: Option<Instant>,
) -> (Vec<u64>, bool) {
    let graph = CompatibilityGraph::from_fn(vertices.len(), |u, v| {
        rule.admissible(vertices[u], vertices[v])
    });
    let result = match config.mode {
        SearchMode::Exact => max_clique_exact(&graph, deadline),
        SearchMode::Greedy => max_clique_greedy(&graph, GREEDY_RESTARTS, config.seed, deadline),
    };
    (
        result.members.iter().map(|&i| vertices[i]).collect(),
        result.complete,
    )
}

fn greedy_pool(rule: &CompatibilityRule, s: usize, seed: u64) -> Vec<u64> {
    let admissible_from_zero = |c: u64| rule.admissible(0, c);
    let mut pool: Vec<u64> = if s <= 20 {
        (1..1u64 << s)
            .map(|k| reverse_low(k, s))
            .filter(|&c| admissible_from_zero(c))
            .collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
        let mut seen = HashSet::new();
        for _ in 0..4 * MAX_GRAPH_VERTICES {
            let c = rng.random::<u64>() & low_mask(s);
            if admissible_from_zero(c) {
                seen.insert(c);
            }
        }
        seen.into_iter().collect()
    };
    if pool.len() > MAX_GRAPH_VERTICES {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for i in 0..MAX_GRAPH_VERTICES {
            let j = rng.random_range(i..pool.len());
            pool.swap(i, j);
        }
        pool.truncate(MAX_GRAPH_VERTICES);
    }
    pool.sort_unstable_by_key(|&c| reverse_low(c, s));
    pool
}

/// Largest word set found for the configuration, re-verified before return.
pub fn search_code(config: &SearchConfig) -> Result<SearchOutcome> {
    config.validate()?;
    let deadline = config.time_budget.map(|b| Instant::now() + b);
    let n = config.graph.n();
    let s = n - config.r;
    let rule = CompatibilityRule::new(&config.graph, config.r, config.target_distance - 1)?;

    let (members, complete) = match config.mode {
        SearchMode::Exact => {
            let neighbours: Vec<u64> = candidate_words(n, config.r)?
                .into_iter()
                .skip(1)
                .filter(|&c| rule.admissible(0, c))
                .collect();
            if neighbours.len() > MAX_GRAPH_VERTICES {
                return Err(Error::SearchConfig(format!(
                    "{} compatible candidates exceed the exact-mode limit of {MAX_GRAPH_VERTICES}; use greedy mode",
                    neighbours.len()
                )));
            }
            clique_words(&rule, &neighbours, config, deadline)
        }
        SearchMode::Greedy => {
            clique_words(&rule, &greedy_pool(&rule, s, config.seed), config, deadline)
        }
    };

    let mut words = Vec::with_capacity(members.len() + 1);
    words.push(0);
    words.extend(members);
    let code = OcwsCode::new(
        config.graph.clone(),
        config.r,
        words,
        Some(config.target_distance),
    )?;
    let certified = certify_distance(&code);
    if certified < config.target_distance {
        return Err(Error::Unverified {
            certified,
            target: config.target_distance,
        });
    }
    if let Some(target_k) = config.target_k {
        if code.dimension() < target_k {
            return Err(Error::TargetNotMet {
                best_k: code.dimension(),
                target_k,
            });
        }
    }
    Ok(SearchOutcome {
        code,
        complete,
        certified_distance: certified,
    })
}
