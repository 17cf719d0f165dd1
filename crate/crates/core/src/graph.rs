//! Finite simple graphs with labeled vertices and bit-set adjacency rows.
//!
//! Everything downstream is induced-subgraph-heavy, so adjacency is kept as
//! one `u64` mask per vertex and set operations are mask intersections.

use crate::error::{Error, Result};
use std::fmt;

/// Hard cap on vertex count so adjacency rows fit in a `u64`.
pub const MAX_VERTICES: usize = 64;

/// An immutable finite simple graph. No self-loops, adjacency symmetric,
/// labels unique.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    labels: Vec<String>,
    adj: Vec<u64>,
}

/// An induced cycle: consecutive vertices (cyclically) adjacent, all other
/// pairs non-adjacent, length at least 4.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleWitness {
    pub vertices: Vec<usize>,
}

impl Graph {
    /// Builds a graph from edges given as label pairs. Vertices are indexed
    /// by position in the sorted label list. Duplicate edges are idempotent;
    /// self-loops are rejected.
    pub fn from_edges<S: AsRef<str>>(edges: &[(S, S)]) -> Result<Graph> {
        Self::from_edges_and_isolated(edges, &[] as &[&str])
    }

    /// Same as [`Graph::from_edges`] but with explicitly listed isolated
    /// vertices.
    pub fn from_edges_and_isolated<S: AsRef<str>, T: AsRef<str>>(
        edges: &[(S, S)],
        isolated: &[T],
    ) -> Result<Graph> {
        let mut labels: Vec<String> = Vec::new();
        for (u, v) in edges {
            labels.push(u.as_ref().to_string());
            labels.push(v.as_ref().to_string());
        }
        for w in isolated {
            labels.push(w.as_ref().to_string());
        }
        labels.sort();
        labels.dedup();
        let mut g = Graph::with_vertices(labels)?;
        for (u, v) in edges {
            g.insert_edge_by_label(u.as_ref(), v.as_ref())?;
        }
        Ok(g)
    }

    /// Builds an edgeless graph over the given vertex order. The order is
    /// preserved verbatim, which is what file parsers want.
    pub fn with_vertices<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Graph> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() > MAX_VERTICES {
            return Err(Error::TooManyVertices(labels.len(), MAX_VERTICES));
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        let n = labels.len();
        Ok(Graph {
            labels,
            adj: vec![0; n],
        })
    }

    fn insert_edge_by_label(&mut self, u: &str, v: &str) -> Result<()> {
        let ui = self.index_of(u).ok_or_else(|| Error::UnknownVertex(u.into()))?;
        let vi = self.index_of(v).ok_or_else(|| Error::UnknownVertex(v.into()))?;
        self.insert_edge(ui, vi)
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u == v {
            return Err(Error::SelfLoop(self.labels[u].clone()));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn require(&self, label: &str) -> Result<usize> {
        self.index_of(label)
            .ok_or_else(|| Error::UnknownVertex(label.into()))
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.adj[u] & (1 << v) != 0
    }

    pub fn neighbors_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        BitIter(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Edges as index pairs (u < v), ordered lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n() {
            for v in self.neighbors(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    /// uv is an edge of the result iff u != v and uv is not an edge here.
    pub fn complement(&self) -> Graph {
        let n = self.n();
        let full = if n == 64 { !0u64 } else { (1u64 << n) - 1 };
        let adj = (0..n)
            .map(|v| (!self.adj[v]) & full & !(1 << v))
            .collect();
        Graph {
            labels: self.labels.clone(),
            adj,
        }
    }

    /// The induced subgraph on the given vertices, in the given order.
    pub fn induced(&self, keep: &[usize]) -> Result<Graph> {
        for &v in keep {
            if v >= self.n() {
                return Err(Error::UnknownVertex(format!("#{v}")));
            }
        }
        let mut g = Graph::with_vertices(keep.iter().map(|&v| self.labels[v].clone()))?;
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate() {
                if i < j && self.has_edge(u, v) {
                    g.insert_edge(i, j)?;
                }
            }
        }
        Ok(g)
    }

    /// Induced subgraph on all vertices except the given set.
    pub fn without(&self, drop: &[usize]) -> Graph {
        let keep: Vec<usize> = (0..self.n()).filter(|v| !drop.contains(v)).collect();
        self.induced(&keep).expect("kept vertices are in range")
    }

    /// The closed neighborhood, as a mask: x together with its neighbors.
    pub fn star_mask(&self, v: usize) -> u64 {
        self.adj[v] | (1 << v)
    }

    /// The closed neighborhood as a sorted vertex list.
    pub fn star(&self, v: usize) -> Vec<usize> {
        BitIter(self.star_mask(v)).collect()
    }

    /// BFS distance; `None` when disconnected.
    pub fn distance(&self, u: usize, v: usize) -> Option<usize> {
        if u == v {
            return Some(0);
        }
        let mut seen = 1u64 << u;
        let mut frontier = 1u64 << u;
        let mut d = 0;
        while frontier != 0 {
            d += 1;
            let mut next = 0u64;
            for w in BitIter(frontier) {
                next |= self.adj[w];
            }
            next &= !seen;
            if next & (1 << v) != 0 {
                return Some(d);
            }
            seen |= next;
            frontier = next;
        }
        None
    }

    /// Searches for an induced cycle with at least `k` vertices (`k >= 4`);
    /// first witness in lexicographic DFS order. Chordality at desk scale is
    /// exactly `find_induced_cycle_at_least(4).is_none()`.
    pub fn find_induced_cycle_at_least(&self, k: usize) -> Option<CycleWitness> {
        assert!(k >= 4, "induced cycle search starts at length 4");
        let mut found = None;
        self.induced_cycle_scan(k, &mut |cycle| {
            found = Some(CycleWitness {
                vertices: cycle.to_vec(),
            });
            true
        });
        found
    }

    /// All induced cycles with at least `k` vertices, deduplicated by vertex
    /// set (an induced cycle is determined by its support).
    pub fn induced_cycles_at_least(&self, k: usize) -> Vec<CycleWitness> {
        assert!(k >= 4);
        let mut seen = std::collections::HashSet::new();
        let mut out = Vec::new();
        self.induced_cycle_scan(k, &mut |cycle| {
            let mut key: Vec<usize> = cycle.to_vec();
            key.sort_unstable();
            if seen.insert(key) {
                out.push(CycleWitness {
                    vertices: cycle.to_vec(),
                });
            }
            false
        });
        out
    }

    pub fn is_chordal(&self) -> bool {
        self.find_induced_cycle_at_least(4).is_none()
    }

    /// DFS over induced paths rooted at their minimum vertex; `emit` returns
    /// true to stop the scan.
    fn induced_cycle_scan(&self, k: usize, emit: &mut dyn FnMut(&[usize]) -> bool) {
        let n = self.n();
        let mut path = Vec::with_capacity(n);
        for v0 in 0..n {
            path.clear();
            path.push(v0);
            if self.cycle_dfs(v0, k, &mut path, 1u64 << v0, emit) {
                return;
            }
        }
    }

    fn cycle_dfs(
        &self,
        v0: usize,
        k: usize,
        path: &mut Vec<usize>,
        used: u64,
        emit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        let last = *path.last().unwrap();
        // Interior vertices the new vertex must avoid: everything strictly
        // between the root and the path end.
        let mut interior = 0u64;
        for &p in path.get(1..path.len() - 1).unwrap_or(&[]) {
            interior |= 1 << p;
        }
        for w in self.neighbors(last) {
            if w <= v0 || used & (1 << w) != 0 {
                continue;
            }
            if self.adj[w] & interior != 0 {
                continue;
            }
            if path.len() == 1 {
                // Second vertex: adjacency to the root is the path edge.
                path.push(w);
                if self.cycle_dfs(v0, k, path, used | (1 << w), emit) {
                    return true;
                }
                path.pop();
            } else if self.has_edge(w, v0) {
                let len = path.len() + 1;
                if len >= 4 && len >= k {
                    path.push(w);
                    let stop = emit(path);
                    path.pop();
                    if stop {
                        return true;
                    }
                }
                // w is chorded to the root, so it cannot be interior.
            } else {
                path.push(w);
                if self.cycle_dfs(v0, k, path, used | (1 << w), emit) {
                    return true;
                }
                path.pop();
            }
        }
        false
    }

    /// Parses the edge-list text format: one edge per line as two
    /// whitespace-separated labels, `#` comments, a single label declares an
    /// isolated vertex. Vertex order is first-appearance order.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut order: Vec<String> = Vec::new();
        let mut edges: Vec<(String, String)> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            match fields.as_slice() {
                [v] => {
                    if !order.iter().any(|l| l == v) {
                        order.push(v.to_string());
                    }
                }
                [u, v] => {
                    if u == v {
                        return Err(Error::Parse {
                            line: lineno + 1,
                            msg: format!("self-loop on `{u}`"),
                        });
                    }
                    for w in [u, v] {
                        if !order.iter().any(|l| l == w) {
                            order.push(w.to_string());
                        }
                    }
                    edges.push((u.to_string(), v.to_string()));
                }
                _ => {
                    return Err(Error::Parse {
                        line: lineno + 1,
                        msg: format!("expected one or two labels, got {}", fields.len()),
                    });
                }
            }
        }
        let mut g = Graph::with_vertices(order)?;
        for (u, v) in &edges {
            g.insert_edge_by_label(u, v)?;
        }
        Ok(g)
    }

    /// Serializes back to the edge-list format.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for (u, v) in self.edges() {
            out.push_str(&format!("{} {}\n", self.labels[u], self.labels[v]));
        }
        for v in 0..self.n() {
            if self.degree(v) == 0 {
                out.push_str(&format!("{}\n", self.labels[v]));
            }
        }
        out
    }

    /// One-line form used in failure reports.
    pub fn compact(&self) -> String {
        self.to_edge_list().trim_end().replace('\n', "; ")
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph{{{}}}", self.compact())
    }
}

impl CycleWitness {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Checks the witness against a graph: cyclically consecutive pairs
    /// adjacent, everything else non-adjacent, length >= 4.
    pub fn validate(&self, g: &Graph) -> bool {
        let m = self.vertices.len();
        if m < 4 {
            return false;
        }
        for i in 0..m {
            for j in i + 1..m {
                let consecutive = j == i + 1 || (i == 0 && j == m - 1);
                if g.has_edge(self.vertices[i], self.vertices[j]) != consecutive {
                    return false;
                }
            }
        }
        true
    }
}

/// Iterator over set bits of a mask, ascending.
pub struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let i = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(i)
        }
    }
}
