//! Hypergraphs as dense edge lists, with neighborhoods, Berge-path
//! distances, balls and the structural predicates the rest of the crate
//! builds on.
//!
//! Vertices are integers `0..n`. Role labels (e.g. `"b_3"`, `"A_2#1"`) are
//! carried in a side table so constructions can annotate their output
//! without affecting any algorithm. Edge list order is part of a
//! hypergraph's identity and is preserved by the text format.

use std::collections::BTreeMap;

use serde_json::{json, Value};
use thiserror::Error;

use crate::vertex_set::{VertexSet, MAX_VERTICES};

#[derive(Debug, Error)]
pub enum HypergraphError {
    #[error("vertex count {0} exceeds the cap of {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("edge {index} is empty")]
    EmptyEdge { index: usize },
    #[error("edge {index} contains vertex {vertex}, universe is 0..{n}")]
    VertexOutOfRange {
        index: usize,
        vertex: usize,
        n: usize,
    },
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// A hypergraph on vertices `0..n` with an ordered list of nonempty edges.
///
/// Immutable after construction apart from label annotation; all queries are
/// pure, so shared read-only use across threads is safe.
#[derive(Clone, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<VertexSet>,
    /// For each vertex, the indices of the edges containing it.
    incidence: Vec<Vec<u32>>,
    labels: BTreeMap<usize, String>,
}

impl Hypergraph {
    pub fn new(n: usize, edges: Vec<VertexSet>) -> Result<Self, HypergraphError> {
        if n > MAX_VERTICES {
            return Err(HypergraphError::TooManyVertices(n));
        }
        for (index, edge) in edges.iter().enumerate() {
            if edge.is_empty() {
                return Err(HypergraphError::EmptyEdge { index });
            }
            if edge.universe() != n {
                // Re-check membership against the declared universe.
                if let Some(vertex) = edge.iter().find(|&v| v >= n) {
                    return Err(HypergraphError::VertexOutOfRange { index, vertex, n });
                }
            }
        }
        // Normalize edge universes to n.
        let edges: Vec<VertexSet> = edges
            .into_iter()
            .map(|e| VertexSet::from_indices(n, e.iter()))
            .collect();
        let mut incidence = vec![Vec::new(); n];
        for (i, edge) in edges.iter().enumerate() {
            for v in edge.iter() {
                incidence[v].push(i as u32);
            }
        }
        Ok(Hypergraph {
            n,
            edges,
            incidence,
            labels: BTreeMap::new(),
        })
    }

    pub fn from_edge_lists(n: usize, lists: &[Vec<usize>]) -> Result<Self, HypergraphError> {
        if n > MAX_VERTICES {
            return Err(HypergraphError::TooManyVertices(n));
        }
        let mut edges = Vec::with_capacity(lists.len());
        for (index, list) in lists.iter().enumerate() {
            if list.is_empty() {
                return Err(HypergraphError::EmptyEdge { index });
            }
            if let Some(&vertex) = list.iter().find(|&&v| v >= n) {
                return Err(HypergraphError::VertexOutOfRange { index, vertex, n });
            }
            edges.push(VertexSet::from_indices(n, list.iter().copied()));
        }
        Self::new(n, edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> &VertexSet {
        &self.edges[i]
    }

    /// Indices of the edges containing `v`.
    pub fn incident_edges(&self, v: usize) -> &[u32] {
        &self.incidence[v]
    }

    pub fn set_label(&mut self, v: usize, label: impl Into<String>) {
        assert!(v < self.n, "vertex {v} out of range 0..{}", self.n);
        self.labels.insert(v, label.into());
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.get(&v).map(String::as_str)
    }

    pub fn labels(&self) -> &BTreeMap<usize, String> {
        &self.labels
    }

    /// Closed neighborhood `N_v = {v} ∪ ⋃ {E : v ∈ E}`.
    ///
    /// The closed convention is used throughout: `v` is always a member,
    /// even when isolated (where `N_v = {v}`). For non-isolated vertices
    /// the explicit `{v}` term is redundant.
    pub fn neighborhood(&self, v: usize) -> VertexSet {
        assert!(v < self.n, "vertex {v} out of range 0..{}", self.n);
        let mut out = VertexSet::singleton(self.n, v);
        for &e in &self.incidence[v] {
            out.union_with(&self.edges[e as usize]);
        }
        out
    }

    /// `N(S) = ⋃_{v ∈ S} N_v`; contains `S`.
    pub fn neighborhood_of_set(&self, s: &VertexSet) -> VertexSet {
        let mut out = VertexSet::empty(self.n);
        let mut edge_seen = vec![false; self.edges.len()];
        for v in s.iter() {
            out.insert(v);
            for &e in &self.incidence[v] {
                if !edge_seen[e as usize] {
                    edge_seen[e as usize] = true;
                    out.union_with(&self.edges[e as usize]);
                }
            }
        }
        out
    }

    pub fn is_k_uniform(&self, k: usize) -> bool {
        self.edges.iter().all(|e| e.len() == k)
    }

    /// The common edge size, if the hypergraph is uniform and has edges.
    pub fn uniform_k(&self) -> Option<usize> {
        let k = self.edges.first()?.len();
        self.is_k_uniform(k).then_some(k)
    }

    pub fn has_isolated_vertices(&self) -> bool {
        self.incidence.iter().any(|inc| inc.is_empty())
    }

    /// True iff every pair of vertices is joined by a Berge path.
    /// Hypergraphs with at most one vertex count as connected.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let dist = self.berge_distances(0);
        dist.iter().all(Option::is_some)
    }

    /// Shortest Berge-path distances from `u` to every vertex, by BFS on the
    /// bipartite vertex-edge incidence graph (hypergraph distance is half
    /// the incidence-graph distance). `None` marks unreachable vertices;
    /// infinity is never encoded as a large integer.
    pub fn berge_distances(&self, u: usize) -> Vec<Option<u32>> {
        assert!(u < self.n, "vertex {u} out of range 0..{}", self.n);
        self.multi_source_distances(std::iter::once(u))
    }

    /// As `berge_distances`, but from the nearest of several sources.
    pub fn multi_source_distances(
        &self,
        sources: impl IntoIterator<Item = usize>,
    ) -> Vec<Option<u32>> {
        let mut dist: Vec<Option<u32>> = vec![None; self.n];
        let mut edge_seen = vec![false; self.edges.len()];
        let mut frontier: Vec<usize> = Vec::new();
        for s in sources {
            assert!(s < self.n, "vertex {s} out of range 0..{}", self.n);
            if dist[s].is_none() {
                dist[s] = Some(0);
                frontier.push(s);
            }
        }
        let mut depth = 0u32;
        while !frontier.is_empty() {
            depth += 1;
            let mut next = Vec::new();
            for &v in &frontier {
                for &e in &self.incidence[v] {
                    if edge_seen[e as usize] {
                        continue;
                    }
                    edge_seen[e as usize] = true;
                    for w in self.edges[e as usize].iter() {
                        if dist[w].is_none() {
                            dist[w] = Some(depth);
                            next.push(w);
                        }
                    }
                }
            }
            frontier = next;
        }
        dist
    }

    /// Length of a shortest Berge path between `u` and `v`; `None` if they
    /// lie in different components.
    pub fn berge_distance(&self, u: usize, v: usize) -> Option<u32> {
        assert!(v < self.n, "vertex {v} out of range 0..{}", self.n);
        self.berge_distances(u)[v]
    }

    /// Ball `B_l(u) = {w : d(u,w) <= l}`; `B_0(u) = {u}`.
    pub fn ball(&self, u: usize, l: u32) -> VertexSet {
        let dist = self.berge_distances(u);
        let mut out = VertexSet::empty(self.n);
        for (w, d) in dist.iter().enumerate() {
            if matches!(d, Some(d) if *d <= l) {
                out.insert(w);
            }
        }
        out
    }

    /// Text format: line 1 is `n m`, then `# label <v> <text>` comment lines
    /// for labeled vertices in ascending order, then m lines of
    /// space-separated sorted vertex indices. Byte-exact round trip.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("{} {}\n", self.n, self.edges.len()));
        for (v, label) in &self.labels {
            out.push_str(&format!("# label {v} {label}\n"));
        }
        for edge in &self.edges {
            let indices: Vec<String> = edge.iter().map(|v| v.to_string()).collect();
            out.push_str(&indices.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self, HypergraphError> {
        let parse = |line: usize, message: &str| HypergraphError::Parse {
            line,
            message: message.to_string(),
        };
        let mut lines = text.lines().enumerate();
        let (header_no, header) = lines
            .by_ref()
            .find(|(_, l)| !l.trim().is_empty() && !l.starts_with('#'))
            .ok_or_else(|| parse(0, "missing `n m` header"))?;
        let mut parts = header.split_whitespace();
        let n: usize = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| parse(header_no + 1, "expected vertex count"))?;
        let m: usize = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| parse(header_no + 1, "expected edge count"))?;
        if parts.next().is_some() {
            return Err(parse(header_no + 1, "trailing tokens after `n m`"));
        }

        let mut labels: BTreeMap<usize, String> = BTreeMap::new();
        let mut edge_lists: Vec<Vec<usize>> = Vec::with_capacity(m);
        for (no, line) in lines {
            let line = line.trim_end();
            if line.trim().is_empty() {
                continue;
            }
            if let Some(comment) = line.strip_prefix('#') {
                let mut tokens = comment.split_whitespace();
                if tokens.next() == Some("label") {
                    let v: usize = tokens
                        .next()
                        .and_then(|t| t.parse().ok())
                        .ok_or_else(|| parse(no + 1, "label comment needs a vertex"))?;
                    let text = tokens.collect::<Vec<_>>().join(" ");
                    if v >= n {
                        return Err(parse(no + 1, "label vertex out of range"));
                    }
                    labels.insert(v, text);
                }
                continue;
            }
            let mut indices = Vec::new();
            for token in line.split_whitespace() {
                let v: usize = token
                    .parse()
                    .map_err(|_| parse(no + 1, &format!("bad vertex index `{token}`")))?;
                indices.push(v);
            }
            edge_lists.push(indices);
        }
        if edge_lists.len() != m {
            return Err(parse(
                0,
                &format!("expected {m} edge lines, found {}", edge_lists.len()),
            ));
        }
        let mut h = Self::from_edge_lists(n, &edge_lists)?;
        for (v, label) in labels {
            h.set_label(v, label);
        }
        Ok(h)
    }

    /// JSON mirror of the text format.
    pub fn to_json(&self) -> Value {
        let labels: serde_json::Map<String, Value> = self
            .labels
            .iter()
            .map(|(v, l)| (v.to_string(), json!(l)))
            .collect();
        json!({
            "n": self.n,
            "m": self.edges.len(),
            "labels": labels,
            "edges": self.edges.iter().map(|e| e.to_vec()).collect::<Vec<_>>(),
        })
    }
}

impl std::fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Hypergraph(n={}, edges={:?})", self.n, self.edges)
    }
}
