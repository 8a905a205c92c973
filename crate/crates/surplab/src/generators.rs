//! Seed-deterministic construction of graph families.
//!
//! Randomized families (gnp, perturbed clique unions) key every decision
//! on (seed, pair index) through the pinned generator in [`crate::rng`],
//! so the same spec and seed produce byte-identical graphs on any
//! platform, in any order of evaluation.

use crate::graph::Graph;
use crate::rng::{draw_unit, DetRng};
use serde::{Deserialize, Serialize};
use std::collections::HashSet;
use thiserror::Error;

#[derive(Debug, Error)]
#[error("invalid generator parameter `{field}`: {msg}")]
pub struct GenError {
    pub field: &'static str,
    pub msg: String,
}

fn bad(field: &'static str, msg: impl Into<String>) -> GenError {
    GenError {
        field,
        msg: msg.into(),
    }
}

/// A graph family with its parameters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Family {
    Gnp { n: usize, p: f64 },
    Complete { n: usize },
    Empty { n: usize },
    DisjointCliques { sizes: Vec<usize> },
    PerturbedCliqueUnion { sizes: Vec<usize>, flips: usize },
    TwoOverlappingCliques { a: usize, b: usize, c: usize },
    CompleteBipartite { a: usize, b: usize },
    Turan { n: usize, r: usize },
    Paley { q: usize },
    CliqueMinusMatching { n: usize },
}

/// Family plus seed; the seed only matters for randomized families.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphSpec {
    #[serde(flatten)]
    pub family: Family,
    #[serde(default)]
    pub seed: u64,
}

impl GraphSpec {
    pub fn new(family: Family, seed: u64) -> Self {
        Self { family, seed }
    }
}

/// Builds the graph described by a spec. Deterministic for a fixed
/// spec + seed. Invalid parameters are rejected with the field name.
pub fn generate(spec: &GraphSpec) -> Result<Graph, GenError> {
    match &spec.family {
        Family::Gnp { n, p } => {
            if !(0.0..=1.0).contains(p) {
                return Err(bad("p", format!("{p} not in [0, 1]")));
            }
            Ok(gnp(*n, *p, spec.seed))
        }
        Family::Complete { n } => Ok(complete(*n)),
        Family::Empty { n } => Ok(Graph::empty(*n)),
        Family::DisjointCliques { sizes } => {
            if sizes.contains(&0) {
                return Err(bad("sizes", "clique sizes must be positive"));
            }
            Ok(disjoint_cliques(sizes))
        }
        Family::PerturbedCliqueUnion { sizes, flips } => {
            if sizes.contains(&0) {
                return Err(bad("sizes", "clique sizes must be positive"));
            }
            let n: usize = sizes.iter().sum();
            let pairs = n * n.saturating_sub(1) / 2;
            if *flips > pairs {
                return Err(bad("flips", format!("{flips} exceeds {pairs} vertex pairs")));
            }
            Ok(perturbed_clique_union(sizes, *flips, spec.seed))
        }
        Family::TwoOverlappingCliques { a, b, c } => {
            if a + b + c == 0 {
                return Err(bad("a", "a + b + c must be at least 1"));
            }
            Ok(union_of_two_cliques(*a, *b, *c))
        }
        Family::CompleteBipartite { a, b } => {
            if a + b == 0 {
                return Err(bad("a", "a + b must be at least 1"));
            }
            Ok(complete_bipartite(*a, *b))
        }
        Family::Turan { n, r } => {
            if *r == 0 || r > n {
                return Err(bad("r", format!("need 1 <= r <= n, got r = {r}, n = {n}")));
            }
            Ok(turan(*n, *r))
        }
        Family::Paley { q } => {
            if !is_prime(*q) || q % 4 != 1 {
                return Err(bad("q", format!("{q} is not a prime congruent to 1 mod 4")));
            }
            Ok(paley(*q))
        }
        Family::CliqueMinusMatching { n } => Ok(clique_minus_matching(*n)),
    }
}

/// G(n, p): each pair present independently with probability p, keyed by
/// the pair's index so generation order is irrelevant.
pub fn gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut g = Graph::empty(n);
    for v in 1..n {
        for u in 0..v {
            if draw_unit(seed, pair_index(u, v) as u64) < p {
                g.set_edge(u, v, true);
            }
        }
    }
    g
}

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for v in 1..n {
        for u in 0..v {
            g.set_edge(u, v, true);
        }
    }
    g
}

/// Disjoint cliques with the given sizes, laid out consecutively.
pub fn disjoint_cliques(sizes: &[usize]) -> Graph {
    let n: usize = sizes.iter().sum();
    let mut g = Graph::empty(n);
    let mut base = 0;
    for &s in sizes {
        for i in 0..s {
            for j in (i + 1)..s {
                g.set_edge(base + i, base + j, true);
            }
        }
        base += s;
    }
    g
}

/// The partition matching [`disjoint_cliques`]'s layout.
pub fn clique_partition(sizes: &[usize]) -> Vec<crate::graph::VertexSet> {
    let mut parts = Vec::with_capacity(sizes.len());
    let mut base = 0;
    for &s in sizes {
        parts.push(crate::graph::VertexSet::new((base..base + s).collect()).unwrap());
        base += s;
    }
    parts
}

/// Disjoint cliques with exactly `flips` distinct vertex pairs toggled,
/// chosen uniformly; the planted edit distance back to the clique union
/// is exactly `flips`.
pub fn perturbed_clique_union(sizes: &[usize], flips: usize, seed: u64) -> Graph {
    let mut g = disjoint_cliques(sizes);
    let n = g.n();
    let pairs = (n * n.saturating_sub(1) / 2) as u64;
    let mut rng = DetRng::new(seed);
    let mut chosen = HashSet::new();
    while chosen.len() < flips {
        chosen.insert(rng.next_below(pairs));
    }
    let mut sorted: Vec<u64> = chosen.into_iter().collect();
    sorted.sort_unstable();
    for idx in sorted {
        let (u, v) = pair_from_index(idx as usize);
        g.toggle_edge(u, v);
    }
    g
}

/// Two cliques C1, C2 with |C1 \ C2| = a, |C2 \ C1| = b, |C1 ∩ C2| = c and
/// edges exactly the two cliques. Layout: private side of C1 first, then
/// private side of C2, then the intersection.
pub fn union_of_two_cliques(a: usize, b: usize, c: usize) -> Graph {
    let n = a + b + c;
    let mut g = Graph::empty(n);
    let clique1: Vec<usize> = (0..a).chain(a + b..n).collect();
    let clique2: Vec<usize> = (a..n).collect();
    for cl in [&clique1, &clique2] {
        for (i, &u) in cl.iter().enumerate() {
            for &v in &cl[i + 1..] {
                g.set_edge(u, v, true);
            }
        }
    }
    g
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut g = Graph::empty(a + b);
    for u in 0..a {
        for v in a..a + b {
            g.set_edge(u, v, true);
        }
    }
    g
}

/// Complete multipartite graph with r near-equal classes (residues mod r).
pub fn turan(n: usize, r: usize) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in (u + 1)..n {
            if u % r != v % r {
                g.set_edge(u, v, true);
            }
        }
    }
    g
}

/// Paley graph on a prime q = 1 mod 4: u ~ v iff u - v is a nonzero
/// quadratic residue.
pub fn paley(q: usize) -> Graph {
    let mut residue = vec![false; q];
    for x in 1..q {
        residue[x * x % q] = true;
    }
    let mut g = Graph::empty(q);
    for u in 0..q {
        for v in (u + 1)..q {
            if residue[(v - u) % q] {
                g.set_edge(u, v, true);
            }
        }
    }
    g
}

/// K_n minus the matching (0,1), (2,3), ...; for odd n the last vertex
/// keeps all its edges.
pub fn clique_minus_matching(n: usize) -> Graph {
    let mut g = complete(n);
    let mut i = 0;
    while i + 1 < n {
        g.set_edge(i, i + 1, false);
        i += 2;
    }
    g
}

/// Lexicographic index of the pair (u, v), u < v.
fn pair_index(u: usize, v: usize) -> usize {
    debug_assert!(u < v);
    v * (v - 1) / 2 + u
}

fn pair_from_index(idx: usize) -> (usize, usize) {
    // invert idx = v(v-1)/2 + u with 0 <= u < v
    let mut v = (((8 * idx + 1) as f64).sqrt() as usize).div_ceil(2);
    while v * (v - 1) / 2 > idx {
        v -= 1;
    }
    while (v + 1) * v / 2 <= idx {
        v += 1;
    }
    (idx - v * (v - 1) / 2, v)
}

fn is_prime(q: usize) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= q {
        if q.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}
