//! Maximum clique search on an explicit compatibility graph.
//!
//! The exact solver is a branch and bound over bitset neighbourhoods with a
//! greedy-colouring bound. Vertices are branched in increasing index order
//! and only strictly larger cliques replace the incumbent, so the first
//! maximum clique found is the lexicographically least one.

use std::time::Instant;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Bitset = Vec<u64>;

fn bitset_ones(set: &[u64]) -> impl Iterator<Item = usize> + '_ {
    set.iter().enumerate().flat_map(|(w, &word)| {
        let mut word = word;
        std::iter::from_fn(move || {
            if word == 0 {
                None
            } else {
                let b = word.trailing_zeros() as usize;
                word &= word - 1;
                Some(w * 64 + b)
            }
        })
    })
}

fn highest(set: &[u64]) -> Option<usize> {
    set.iter()
        .enumerate()
        .rev()
        .find(|(_, &w)| w != 0)
        .map(|(i, &w)| i * 64 + 63 - w.leading_zeros() as usize)
}

#[inline]
fn clear(set: &mut [u64], v: usize) {
    set[v / 64] &= !(1u64 << (v % 64));
}

#[inline]
fn contains(set: &[u64], v: usize) -> bool {
    set[v / 64] >> (v % 64) & 1 == 1
}

/// Undirected simple graph with bitset rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompatibilityGraph {
    len: usize,
    adjacency: Vec<Bitset>,
}

impl CompatibilityGraph {
    /// Builds the graph on `0..len` from a symmetric predicate.
    pub fn from_fn(len: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let words = len.div_ceil(64);
        let mut adjacency = vec![vec![0u64; words]; len];
        for u in 0..len {
            for v in (u + 1)..len {
                if adjacent(u, v) {
                    adjacency[u][v / 64] |= 1 << (v % 64);
                    adjacency[v][u / 64] |= 1 << (u % 64);
                }
            }
        }
        Self { len, adjacency }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        contains(&self.adjacency[u], v)
    }

    pub fn is_clique(&self, members: &[usize]) -> bool {
        members
            .iter()
            .enumerate()
            .all(|(k, &u)| members[k + 1..].iter().all(|&v| self.adjacent(u, v)))
    }

    fn all(&self) -> Bitset {
        let mut set = vec![u64::MAX; self.len.div_ceil(64)];
        if !self.len.is_multiple_of(64) {
            if let Some(last) = set.last_mut() {
                *last = (1u64 << (self.len % 64)) - 1;
            }
        }
        set
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueResult {
    /// Vertex indices in increasing order.
    pub members: Vec<usize>,
    /// False when a deadline cut the exact search short.
    pub complete: bool,
    pub nodes: u64,
}

struct Exact<'a> {
    graph: &'a CompatibilityGraph,
    best: Vec<usize>,
    nodes: u64,
    deadline: Option<Instant>,
    aborted: bool,
}

impl Exact<'_> {
    /// Number of distinct colours used by each suffix of `vertices` under a
    /// proper colouring of `candidates`.
    fn suffix_bounds(&self, candidates: &Bitset, vertices: &[usize]) -> Vec<usize> {
        let mut colour = vec![0usize; self.graph.len];
        let mut uncoloured = candidates.clone();
        let mut colours = 0;
        while highest(&uncoloured).is_some() {
            let mut open = uncoloured.clone();
            while let Some(v) = highest(&open) {
                colour[v] = colours;
                clear(&mut uncoloured, v);
                clear(&mut open, v);
                for (o, a) in open.iter_mut().zip(&self.graph.adjacency[v]) {
                    *o &= !a;
                }
            }
            colours += 1;
        }
        let mut seen = vec![false; colours];
        let mut distinct = 0;
        let mut bounds = vec![0; vertices.len()];
        for (k, &v) in vertices.iter().enumerate().rev() {
            if !seen[colour[v]] {
                seen[colour[v]] = true;
                distinct += 1;
            }
            bounds[k] = distinct;
        }
        bounds
    }

    fn expand(&mut self, clique: &mut Vec<usize>, candidates: Bitset) {
        self.nodes += 1;
        if clique.len() > self.best.len() {
            self.best = clique.clone();
        }
        if self.nodes.is_multiple_of(1024) {
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    self.aborted = true;
                }
            }
        }
        if self.aborted {
            return;
        }
        let vertices: Vec<usize> = bitset_ones(&candidates).collect();
        if vertices.is_empty() {
            return;
        }
        let bounds = self.suffix_bounds(&candidates, &vertices);
        let mut rest = candidates;
        for (k, &v) in vertices.iter().enumerate() {
            if clique.len() + bounds[k] <= self.best.len() || self.aborted {
                return;
            }
            clear(&mut rest, v);
            let next: Bitset = rest
                .iter()
                .zip(&self.graph.adjacency[v])
                .map(|(r, a)| r & a)
                .collect();
            clique.push(v);
            self.expand(clique, next);
            clique.pop();
        }
    }
}

/// Lexicographically least maximum clique, or the best found before `deadline`.
pub fn max_clique_exact(graph: &CompatibilityGraph, deadline: Option<Instant>) -> CliqueResult {
    let mut solver = Exact {
        graph,
        best: Vec::new(),
        nodes: 0,
        deadline,
        aborted: false,
    };
    solver.expand(&mut Vec::new(), graph.all());
    CliqueResult {
        members: solver.best,
        complete: !solver.aborted,
        nodes: solver.nodes,
    }
}

fn greedy_pass(graph: &CompatibilityGraph, order: &[usize]) -> Vec<usize> {
    let mut common = graph.all();
    let mut members = Vec::new();
    for &v in order {
        if contains(&common, v) {
            members.push(v);
            for (c, a) in common.iter_mut().zip(&graph.adjacency[v]) {
                *c &= a;
            }
        }
    }
    members.sort_unstable();
    members
}

/// Best of `restarts` greedy passes: the first in index order, the rest over
/// seeded random orders that keep vertex 0 first. Ties go to the
/// lexicographically least clique.
pub fn max_clique_greedy(
    graph: &CompatibilityGraph,
    restarts: usize,
    seed: u64,
    deadline: Option<Instant>,
) -> CliqueResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..graph.len()).collect();
    let mut best = greedy_pass(graph, &order);
    let mut passes = 1;
    for _ in 1..restarts.max(1) {
        if deadline.is_some_and(|d| Instant::now() >= d) {
            break;
        }
        if order.len() > 1 {
            order[1..].shuffle(&mut rng);
        }
        let members = greedy_pass(graph, &order);
        if members.len() > best.len() || (members.len() == best.len() && members < best) {
            best = members;
        }
        passes += 1;
    }
    CliqueResult {
        members: best,
        complete: true,
        nodes: passes,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    /// Brute force over all subsets; returns (size, lexicographically least).
    fn brute_force(graph: &CompatibilityGraph) -> (usize, Vec<usize>) {
        let m = graph.len();
        let mut best: Vec<usize> = Vec::new();
        for mask in 0u32..(1 << m) {
            let members: Vec<usize> = (0..m).filter(|&v| mask >> v & 1 == 1).collect();
            if graph.is_clique(&members)
                && (members.len() > best.len() || (members.len() == best.len() && members < best))
            {
                best = members;
            }
        }
        (best.len(), best)
    }

    #[test]
    fn complete_and_edgeless() {
        let complete = CompatibilityGraph::from_fn(70, |_, _| true);
        let r = max_clique_exact(&complete, None);
        assert_eq!(r.members, (0..70).collect::<Vec<_>>());
        assert!(r.complete);
        let edgeless = CompatibilityGraph::from_fn(70, |_, _| false);
        assert_eq!(max_clique_exact(&edgeless, None).members, vec![0]);
        assert_eq!(max_clique_greedy(&edgeless, 8, 0, None).members, vec![0]);
        let empty = CompatibilityGraph::from_fn(0, |_, _| true);
        assert!(max_clique_exact(&empty, None).members.is_empty());
    }

    #[test]
    fn exact_matches_brute_force_on_random_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for trial in 0..200 {
            let m = rng.random_range(1..=14);
            let p: f64 = rng.random_range(0.2..0.9);
            let edges: Vec<bool> = (0..m * m).map(|_| rng.random_bool(p)).collect();
            let g = CompatibilityGraph::from_fn(m, |u, v| edges[u * m + v]);
            let (size, lex) = brute_force(&g);
            let exact = max_clique_exact(&g, None);
            assert_eq!(exact.members, lex, "trial {trial}");
            assert_eq!(exact.members.len(), size);
            let greedy = max_clique_greedy(&g, 16, trial, None);
            assert!(g.is_clique(&greedy.members));
            assert!(greedy.members.len() <= size);
        }
    }

    #[test]
    fn greedy_is_deterministic_per_seed() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let m = 60;
        let edges: Vec<bool> = (0..m * m).map(|_| rng.random_bool(0.5)).collect();
        let g = CompatibilityGraph::from_fn(m, |u, v| edges[u * m + v]);
        let a = max_clique_greedy(&g, 32, 99, None);
        let b = max_clique_greedy(&g, 32, 99, None);
        assert_eq!(a, b);
    }

    #[test]
    fn expired_deadline_reports_incomplete() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let m = 300;
        let edges: Vec<bool> = (0..m * m).map(|_| rng.random_bool(0.9)).collect();
        let g = CompatibilityGraph::from_fn(m, |u, v| edges[u * m + v]);
        let r = max_clique_exact(&g, Some(Instant::now()));
        assert!(!r.complete);
        assert!(g.is_clique(&r.members));
    }
}
