//! Simple undirected graphs with packed-bitset adjacency.
//!
//! Adjacency rows are stored as `u64` words so neighborhood intersections
//! cost O(n/64); that is what keeps the exhaustive MaxCut search and the
//! clique branch-and-bound fast at desk scale (n up to a few thousand).
//! Graphs are immutable after construction and safe to share across
//! threads; every operation here is pure.
//!
//! Vertices are 0-indexed everywhere, including the text file format.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use std::path::Path;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex index {index} out of range for n = {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("cut has length {got}, graph has {expected} vertices")]
    CutLengthMismatch { got: usize, expected: usize },
    #[error("vertex sets overlap at vertex {0}")]
    OverlappingSets(usize),
    #[error("vertex set not strictly increasing at position {0}")]
    UnsortedSet(usize),
    #[error("parts do not partition the vertex set: {0}")]
    NotAPartition(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// A sorted set of vertex indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct VertexSet {
    members: Vec<usize>,
}

impl VertexSet {
    /// Builds from an already strictly increasing sequence.
    pub fn new(members: Vec<usize>) -> Result<Self, GraphError> {
        for i in 1..members.len() {
            if members[i] <= members[i - 1] {
                return Err(GraphError::UnsortedSet(i));
            }
        }
        Ok(Self { members })
    }

    /// Sorts and deduplicates arbitrary indices.
    pub fn from_unsorted(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        Self { members }
    }

    /// The full vertex set {0, .., n-1}.
    pub fn full(n: usize) -> Self {
        Self {
            members: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.members
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn max(&self) -> Option<usize> {
        self.members.last().copied()
    }

    pub(crate) fn mask_words(&self, words: usize) -> Vec<u64> {
        let mut mask = vec![0u64; words];
        for &v in &self.members {
            mask[v / 64] |= 1u64 << (v % 64);
        }
        mask
    }
}

/// A bipartition of the vertices, `side[v]` naming the part of vertex v.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cut {
    side: Vec<bool>,
}

impl Cut {
    pub fn new(side: Vec<bool>) -> Self {
        Self { side }
    }

    /// All vertices on side 0.
    pub fn all_zero(n: usize) -> Self {
        Self {
            side: vec![false; n],
        }
    }

    pub fn len(&self) -> usize {
        self.side.len()
    }

    pub fn is_empty(&self) -> bool {
        self.side.is_empty()
    }

    pub fn side(&self) -> &[bool] {
        &self.side
    }

    /// Flips every side so that vertex 0 lands on side 0. The cut itself is
    /// unchanged; this picks the canonical representative of the pair.
    pub fn normalized(mut self) -> Self {
        if self.side.first().copied().unwrap_or(false) {
            for s in &mut self.side {
                *s = !*s;
            }
        }
        self
    }

    pub(crate) fn from_mask(mask: u64, n: usize) -> Self {
        Self {
            side: (0..n).map(|v| mask >> v & 1 == 1).collect(),
        }
    }
}

impl Serialize for Cut {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.side.iter().map(|&b| u8::from(b)))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CutStats {
    pub cut_size: u64,
    pub surplus: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Densities {
    pub edge_density: f64,
    pub max_degree: usize,
    pub avg_degree: f64,
}

/// Simple undirected graph: symmetric, irreflexive adjacency with cached
/// degrees and edge count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
    degrees: Vec<u32>,
    m: usize,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(64);
        Self {
            n,
            words,
            bits: vec![0; n * words],
            degrees: vec![0; n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list. `n_hint`, when given, fixes the
    /// vertex count and makes out-of-range indices an error; otherwise the
    /// count is one more than the largest index seen. Duplicate edges
    /// collapse silently; self-loops are rejected.
    pub fn from_edge_list(
        edges: &[(usize, usize)],
        n_hint: Option<usize>,
    ) -> Result<Self, GraphError> {
        let mut max_idx = None::<usize>;
        for &(u, v) in edges {
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            let hi = u.max(v);
            if let Some(n) = n_hint {
                if hi >= n {
                    return Err(GraphError::IndexOutOfRange { index: hi, n });
                }
            }
            max_idx = Some(max_idx.map_or(hi, |m| m.max(hi)));
        }
        let n = n_hint.unwrap_or_else(|| max_idx.map_or(0, |m| m + 1));
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            g.set_edge(u, v, true);
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: usize) -> usize {
        self.degrees[v] as usize
    }

    pub fn max_degree(&self) -> usize {
        self.degrees.iter().copied().max().unwrap_or(0) as usize
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if u == v || u >= self.n || v >= self.n {
            return false;
        }
        self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub(crate) fn row(&self, u: usize) -> &[u64] {
        &self.bits[u * self.words..(u + 1) * self.words]
    }

    pub(crate) fn words(&self) -> usize {
        self.words
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize, present: bool) {
        debug_assert!(u != v && u < self.n && v < self.n);
        let had = self.has_edge(u, v);
        if had == present {
            return;
        }
        let (wu, wv) = (u * self.words + v / 64, v * self.words + u / 64);
        self.bits[wu] ^= 1u64 << (v % 64);
        self.bits[wv] ^= 1u64 << (u % 64);
        if present {
            self.degrees[u] += 1;
            self.degrees[v] += 1;
            self.m += 1;
        } else {
            self.degrees[u] -= 1;
            self.degrees[v] -= 1;
            self.m -= 1;
        }
    }

    pub(crate) fn toggle_edge(&mut self, u: usize, v: usize) {
        let had = self.has_edge(u, v);
        self.set_edge(u, v, !had);
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.degree(v));
        for (w, &word) in self.row(v).iter().enumerate() {
            let mut bits = word;
            while bits != 0 {
                let b = bits.trailing_zeros() as usize;
                out.push(w * 64 + b);
                bits &= bits - 1;
            }
        }
        out
    }

    /// All edges, each once, sorted by (u, v) with u < v.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Edge present iff absent in `self`, over distinct vertices.
    pub fn complement(&self) -> Self {
        let mut g = Self::empty(self.n);
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !self.has_edge(u, v) {
                    g.set_edge(u, v, true);
                }
            }
        }
        g
    }

    /// Subgraph induced by `set`, vertices relabeled 0..|set|-1 preserving
    /// the set's order.
    pub fn induced(&self, set: &VertexSet) -> Result<Self, GraphError> {
        if let Some(mx) = set.max() {
            if mx >= self.n {
                return Err(GraphError::IndexOutOfRange { index: mx, n: self.n });
            }
        }
        let verts = set.as_slice();
        let mut g = Self::empty(verts.len());
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.set_edge(i, j, true);
                }
            }
        }
        Ok(g)
    }

    /// Edge density m / (n choose 2), maximum degree and average degree.
    /// Density is 0 by convention when n < 2.
    pub fn densities(&self) -> Densities {
        let pairs = self.n * self.n.saturating_sub(1) / 2;
        Densities {
            edge_density: if pairs == 0 {
                0.0
            } else {
                self.m as f64 / pairs as f64
            },
            max_degree: self.max_degree(),
            avg_degree: if self.n == 0 {
                0.0
            } else {
                2.0 * self.m as f64 / self.n as f64
            },
        }
    }

    pub fn edge_density(&self) -> f64 {
        self.densities().edge_density
    }

    /// Crossing-edge count and surplus (cut size minus m/2) of one cut.
    /// The surplus of a single cut may be negative.
    pub fn evaluate_cut(&self, cut: &Cut) -> Result<CutStats, GraphError> {
        if cut.len() != self.n {
            return Err(GraphError::CutLengthMismatch {
                got: cut.len(),
                expected: self.n,
            });
        }
        let mut mask1 = vec![0u64; self.words];
        for (v, &s) in cut.side().iter().enumerate() {
            if s {
                mask1[v / 64] |= 1u64 << (v % 64);
            }
        }
        let mut cross = 0u64;
        for (v, &s) in cut.side().iter().enumerate() {
            if !s {
                cross += count_and(self.row(v), &mask1);
            }
        }
        Ok(CutStats {
            cut_size: cross,
            surplus: cross as f64 - self.m as f64 / 2.0,
        })
    }

    /// Number of edges with one endpoint in `u_set` and the other in
    /// `v_set`; the sets must be disjoint.
    pub fn bipartite_edges(&self, u_set: &VertexSet, v_set: &VertexSet) -> Result<u64, GraphError> {
        for v in u_set.iter() {
            if v_set.contains(v) {
                return Err(GraphError::OverlappingSets(v));
            }
        }
        for s in [u_set, v_set] {
            if let Some(mx) = s.max() {
                if mx >= self.n {
                    return Err(GraphError::IndexOutOfRange { index: mx, n: self.n });
                }
            }
        }
        let mask = v_set.mask_words(self.words);
        Ok(u_set.iter().map(|u| count_and(self.row(u), &mask)).sum())
    }

    /// Number of edges inside `set`.
    pub fn edges_within(&self, set: &VertexSet) -> u64 {
        let mask = set.mask_words(self.words);
        let total: u64 = set.iter().map(|u| count_and(self.row(u), &mask)).sum();
        total / 2
    }

    /// Edits needed to turn the graph into the disjoint union of cliques on
    /// the given parts: missing within-part pairs plus present cross-part
    /// edges. Zero exactly when the graph already is that clique union.
    pub fn edit_distance_to_partition_cliques(
        &self,
        parts: &[VertexSet],
    ) -> Result<u64, GraphError> {
        let mut seen = vec![false; self.n];
        for part in parts {
            for v in part.iter() {
                if v >= self.n {
                    return Err(GraphError::NotAPartition(format!(
                        "vertex {v} out of range"
                    )));
                }
                if seen[v] {
                    return Err(GraphError::NotAPartition(format!(
                        "vertex {v} appears twice"
                    )));
                }
                seen[v] = true;
            }
        }
        if let Some(v) = seen.iter().position(|&s| !s) {
            return Err(GraphError::NotAPartition(format!("vertex {v} not covered")));
        }
        let mut within_edges = 0u64;
        let mut missing = 0u64;
        for part in parts {
            let k = part.len() as u64;
            let e = self.edges_within(part);
            within_edges += e;
            missing += k * (k - 1) / 2 - e;
        }
        let cross_present = self.m as u64 - within_edges;
        Ok(missing + cross_present)
    }

    /// True when every pair inside `set` is adjacent.
    pub fn is_clique(&self, set: &VertexSet) -> bool {
        let vs = set.as_slice();
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                if !self.has_edge(u, v) {
                    return false;
                }
            }
        }
        true
    }

    /// Exact triangle count via row intersections.
    pub fn triangles(&self) -> u64 {
        let mut count = 0u64;
        for (u, v) in self.edges() {
            // common neighbors above v close a triangle counted once
            let (ru, rv) = (self.row(u), self.row(v));
            for w in (v / 64)..self.words {
                let mut word = ru[w] & rv[w];
                if w == v / 64 {
                    // keep only bits strictly above v within this word
                    word &= if v % 64 == 63 {
                        0
                    } else {
                        !((1u64 << (v % 64 + 1)) - 1)
                    };
                }
                count += word.count_ones() as u64;
            }
        }
        count
    }

    /// Canonical text form: header line `n <N>`, then one edge `u v` per
    /// line in ascending order.
    pub fn to_text(&self) -> String {
        let mut out = format!("n {}\n", self.n);
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// Parses the text format: optional `n <N>` header, one `u v` edge per
    /// line, `#` comment lines ignored. Without a header the vertex count is
    /// one more than the largest index.
    pub fn from_text(text: &str) -> Result<Self, GraphError> {
        let mut n_hint = None;
        let mut edges = Vec::new();
        let mut saw_content = false;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let toks: Vec<&str> = line.split_whitespace().collect();
            if !saw_content && toks.len() == 2 && toks[0] == "n" {
                n_hint = Some(toks[1].parse::<usize>().map_err(|_| GraphError::Parse {
                    line: line_no,
                    msg: format!("bad vertex count `{}`", toks[1]),
                })?);
                saw_content = true;
                continue;
            }
            saw_content = true;
            if toks.len() != 2 {
                return Err(GraphError::Parse {
                    line: line_no,
                    msg: format!("expected `u v`, got `{line}`"),
                });
            }
            let u = toks[0].parse::<usize>().map_err(|_| GraphError::Parse {
                line: line_no,
                msg: format!("bad vertex `{}`", toks[0]),
            })?;
            let v = toks[1].parse::<usize>().map_err(|_| GraphError::Parse {
                line: line_no,
                msg: format!("bad vertex `{}`", toks[1]),
            })?;
            if u == v {
                return Err(GraphError::Parse {
                    line: line_no,
                    msg: format!("self-loop at vertex {u}"),
                });
            }
            if let Some(n) = n_hint {
                if u >= n || v >= n {
                    return Err(GraphError::Parse {
                        line: line_no,
                        msg: format!("vertex {} out of range for n = {n}", u.max(v)),
                    });
                }
            }
            edges.push((u, v));
        }
        Self::from_edge_list(&edges, n_hint)
    }

    pub fn read_file(path: impl AsRef<Path>) -> Result<Self, GraphError> {
        let text = std::fs::read_to_string(path)?;
        Self::from_text(&text)
    }

    pub fn write_file(&self, path: impl AsRef<Path>) -> Result<(), GraphError> {
        std::fs::write(path, self.to_text())?;
        Ok(())
    }
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Graph", 3)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("m", &self.m)?;
        st.serialize_field("edges", &self.edges())?;
        st.end()
    }
}

fn count_and(a: &[u64], b: &[u64]) -> u64 {
    a.iter().zip(b).map(|(x, y)| (x & y).count_ones() as u64).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edge_list(&edges, Some(n)).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                edges.push((u, v));
            }
        }
        Graph::from_edge_list(&edges, Some(n)).unwrap()
    }

    #[test]
    fn build_empty_with_hint() {
        let g = Graph::from_edge_list(&[], Some(3)).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.m(), 0);
    }

    #[test]
    fn build_collapses_duplicates() {
        let g = Graph::from_edge_list(&[(0, 1), (1, 0)], None).unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.m(), 1);
    }

    #[test]
    fn build_c5_degrees() {
        let g = cycle(5);
        assert_eq!(g.n(), 5);
        assert_eq!(g.m(), 5);
        for v in 0..5 {
            assert_eq!(g.degree(v), 2);
        }
    }

    #[test]
    fn build_rejects_self_loop_and_range() {
        assert!(matches!(
            Graph::from_edge_list(&[(2, 2)], None),
            Err(GraphError::SelfLoop(2))
        ));
        assert!(matches!(
            Graph::from_edge_list(&[(0, 5)], Some(3)),
            Err(GraphError::IndexOutOfRange { index: 5, n: 3 })
        ));
    }

    #[test]
    fn complement_of_k3_is_empty() {
        assert_eq!(complete(3).complement().m(), 0);
        assert_eq!(Graph::empty(5).complement(), complete(5));
    }

    #[test]
    fn induced_cases() {
        let k5 = complete(5);
        let tri = k5.induced(&VertexSet::new(vec![0, 1, 2]).unwrap()).unwrap();
        assert_eq!(tri, complete(3));
        assert_eq!(k5.induced(&VertexSet::full(5)).unwrap(), k5);
        // path with 2 edges out of the 5-cycle
        let p = cycle(5).induced(&VertexSet::new(vec![0, 1, 2]).unwrap()).unwrap();
        assert_eq!(p.m(), 2);
        assert!(cycle(5)
            .induced(&VertexSet::new(vec![0, 9]).unwrap())
            .is_err());
    }

    #[test]
    fn densities_cases() {
        let d = complete(4).densities();
        assert_eq!(d.edge_density, 1.0);
        assert_eq!(d.max_degree, 3);
        assert_eq!(d.avg_degree, 3.0);
        let e = Graph::empty(4).densities();
        assert_eq!(e.edge_density, 0.0);
        assert_eq!(e.max_degree, 0);
        let c = cycle(5).densities();
        assert_eq!(c.edge_density, 0.5);
        assert_eq!(c.max_degree, 2);
        assert_eq!(c.avg_degree, 2.0);
    }

    #[test]
    fn cut_evaluate_cases() {
        let k3 = complete(3);
        let stats = k3
            .evaluate_cut(&Cut::new(vec![false, false, true]))
            .unwrap();
        assert_eq!(stats.cut_size, 2);
        assert_eq!(stats.surplus, 0.5);

        let z = k3.evaluate_cut(&Cut::all_zero(3)).unwrap();
        assert_eq!(z.cut_size, 0);
        assert_eq!(z.surplus, -1.5);

        let k4 = complete(4);
        let s = k4
            .evaluate_cut(&Cut::new(vec![false, false, true, true]))
            .unwrap();
        assert_eq!(s.cut_size, 4);
        assert_eq!(s.surplus, 1.0);

        assert!(k4.evaluate_cut(&Cut::all_zero(3)).is_err());
    }

    #[test]
    fn bipartite_edges_cases() {
        let k4 = complete(4);
        let u = VertexSet::new(vec![0, 1]).unwrap();
        let v = VertexSet::new(vec![2, 3]).unwrap();
        assert_eq!(k4.bipartite_edges(&u, &v).unwrap(), 4);
        assert_eq!(
            k4.bipartite_edges(&VertexSet::new(vec![]).unwrap(), &v).unwrap(),
            0
        );
        let c5 = cycle(5);
        let a = VertexSet::new(vec![0]).unwrap();
        let b = VertexSet::new(vec![1, 4]).unwrap();
        assert_eq!(c5.bipartite_edges(&a, &b).unwrap(), 2);
        assert!(k4
            .bipartite_edges(&u, &VertexSet::new(vec![1, 2]).unwrap())
            .is_err());
    }

    #[test]
    fn edit_distance_cases() {
        // disjoint K3 + K2 with its own partition
        let g = Graph::from_edge_list(&[(0, 1), (0, 2), (1, 2), (3, 4)], Some(5)).unwrap();
        let parts = [
            VertexSet::new(vec![0, 1, 2]).unwrap(),
            VertexSet::new(vec![3, 4]).unwrap(),
        ];
        assert_eq!(g.edit_distance_to_partition_cliques(&parts).unwrap(), 0);

        // K_{a+b} split (a, b): exactly the a*b cross pairs must go
        let k7 = complete(7);
        let parts = [
            VertexSet::new(vec![0, 1, 2]).unwrap(),
            VertexSet::new(vec![3, 4, 5, 6]).unwrap(),
        ];
        assert_eq!(k7.edit_distance_to_partition_cliques(&parts).unwrap(), 12);

        // C4 split into opposite pairs of adjacent vertices
        let c4 = cycle(4);
        let parts = [
            VertexSet::new(vec![0, 1]).unwrap(),
            VertexSet::new(vec![2, 3]).unwrap(),
        ];
        assert_eq!(c4.edit_distance_to_partition_cliques(&parts).unwrap(), 2);

        // non-partition rejected
        let bad = [VertexSet::new(vec![0, 1]).unwrap()];
        assert!(c4.edit_distance_to_partition_cliques(&bad).is_err());
    }

    #[test]
    fn triangles_matches_naive() {
        for (g, expect) in [
            (complete(5), 10),
            (cycle(5), 0),
            (complete(3), 1),
            (Graph::empty(4), 0),
        ] {
            assert_eq!(g.triangles(), expect);
        }
        let g = Graph::from_edge_list(&[(0, 1), (1, 2), (0, 2), (2, 3), (3, 0)], None).unwrap();
        assert_eq!(g.triangles(), 2);
    }

    #[test]
    fn triangles_across_word_boundaries() {
        // naive triple-loop oracle on a graph spanning two bitset words
        let n = 70;
        let g = {
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if (u * 37 + v * 11) % 5 < 2 {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edge_list(&edges, Some(n)).unwrap()
        };
        let mut naive = 0u64;
        for a in 0..n {
            for b in (a + 1)..n {
                for c in (b + 1)..n {
                    if g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c) {
                        naive += 1;
                    }
                }
            }
        }
        assert_eq!(g.triangles(), naive);
    }

    #[test]
    fn text_roundtrip_and_errors() {
        let g = cycle(5);
        let text = g.to_text();
        assert!(text.starts_with("n 5\n"));
        assert_eq!(Graph::from_text(&text).unwrap(), g);

        // headerless: n inferred
        let h = Graph::from_text("# comment\n0 1\n2 1\n").unwrap();
        assert_eq!(h.n(), 3);
        assert_eq!(h.m(), 2);

        let err = Graph::from_text("n 3\n0 7\n").unwrap_err();
        assert!(matches!(err, GraphError::Parse { line: 2, .. }));
        let err = Graph::from_text("0 zero\n").unwrap_err();
        assert!(matches!(err, GraphError::Parse { line: 1, .. }));
        let err = Graph::from_text("3 3\n").unwrap_err();
        assert!(matches!(err, GraphError::Parse { line: 1, .. }));
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (2usize..12, proptest::collection::vec((0usize..12, 0usize..12), 0..40)).prop_map(
            |(n, pairs)| {
                let edges: Vec<_> = pairs
                    .into_iter()
                    .map(|(a, b)| (a % n, b % n))
                    .filter(|(a, b)| a != b)
                    .collect();
                Graph::from_edge_list(&edges, Some(n)).unwrap()
            },
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn complement_is_involution(g in arb_graph()) {
            prop_assert_eq!(g.complement().complement(), g);
        }

        #[test]
        fn degree_sum_is_twice_m(g in arb_graph()) {
            let sum: usize = (0..g.n()).map(|v| g.degree(v)).sum();
            prop_assert_eq!(sum, 2 * g.m());
        }

        #[test]
        fn cross_plus_within_is_m(g in arb_graph(), bits in proptest::collection::vec(any::<bool>(), 12)) {
            let side: Vec<bool> = bits[..g.n()].to_vec();
            let cut = Cut::new(side.clone());
            let stats = g.evaluate_cut(&cut).unwrap();
            let s0 = VertexSet::from_unsorted(
                (0..g.n()).filter(|&v| !side[v]).collect());
            let s1 = VertexSet::from_unsorted(
                (0..g.n()).filter(|&v| side[v]).collect());
            let within = g.edges_within(&s0) + g.edges_within(&s1);
            prop_assert_eq!(stats.cut_size + within, g.m() as u64);
        }

        #[test]
        fn induced_full_is_identity(g in arb_graph()) {
            prop_assert_eq!(g.induced(&VertexSet::full(g.n())).unwrap(), g);
        }
    }
}
