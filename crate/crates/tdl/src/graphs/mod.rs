//! Finite simple undirected graphs with stable vertex identifiers `0..n`.
//!
//! Adjacency is stored as one `u64` bitmask per vertex, which caps the
//! supported order at 64 vertices; everything in this workbench is desk
//! scale (n <= ~36), so the cap is never a practical constraint.

pub mod builders;
mod canon;
mod io;

pub use builders::build_named;
pub use canon::{canonical_form, enumerate_connected, GraphCertificate, MAX_CANONICAL_VERTICES};
pub use io::{from_edge_list, from_graph6, to_edge_list, to_graph6};

use std::fmt;

/// Hard cap imposed by the bitmask adjacency representation.
pub const MAX_VERTICES: usize = 64;

/// Errors produced by graph construction, parsing and canonicalization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    /// Builder id not recognized by [`build_named`].
    UnknownBuilder(String),
    /// Builder parameters outside the builder's documented domain.
    InvalidParams { builder: String, reason: String },
    /// More than [`MAX_VERTICES`] vertices requested.
    TooManyVertices(usize),
    /// Self-loops are not representable.
    SelfLoop(usize),
    /// Vertex identifier outside `0..n`.
    VertexOutOfRange { vertex: usize, n: usize },
    /// Exact canonicalization is restricted to small graphs.
    TooLargeForCanonical { n: usize, max: usize },
    /// Enumeration is restricted to `1..=7` vertices.
    OrderOutOfRange(usize),
    /// Malformed input file; `line` is 1-based.
    Parse { line: usize, message: String },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::UnknownBuilder(name) => write!(f, "unknown graph builder `{name}`"),
            GraphError::InvalidParams { builder, reason } => {
                write!(f, "invalid parameters for builder `{builder}`: {reason}")
            }
            GraphError::TooManyVertices(n) => {
                write!(f, "{n} vertices exceeds the supported maximum of {MAX_VERTICES}")
            }
            GraphError::SelfLoop(v) => write!(f, "self-loop at vertex {v}"),
            GraphError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for graph on {n} vertices")
            }
            GraphError::TooLargeForCanonical { n, max } => {
                write!(f, "exact canonicalization supports at most {max} vertices, got {n}")
            }
            GraphError::OrderOutOfRange(n) => {
                write!(f, "connected-graph enumeration supports orders 1..=7, got {n}")
            }
            GraphError::Parse { line, message } => write!(f, "parse error on line {line}: {message}"),
        }
    }
}

impl std::error::Error for GraphError {}

/// A finite simple undirected graph. Vertices are `0..n`.
#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    name: Option<String>,
}

impl PartialEq for Graph {
    /// Structural equality on the labeled vertex set; provenance names are
    /// ignored.
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}
impl Eq for Graph {}

impl Graph {
    /// Creates an edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Graph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph { n, adj: vec![0; n], name: None })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Graph {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: u, n: self.n });
        }
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && (self.adj[u] >> v) & 1 == 1
    }

    /// Neighbor bitmask of `v`.
    #[inline]
    pub fn adj_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        BitIter(self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges as ordered pairs `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            let mut rest = self.adj[u] & !((1u64 << (u + 1)) - 1);
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                out.push((u, v));
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen.count_ones() as usize == self.n
    }

    /// BFS distances from `start`; `usize::MAX` marks unreachable vertices.
    pub fn bfs_distances(&self, start: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        dist[start] = 0;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for u in self.neighbors(v) {
                if dist[u] == usize::MAX {
                    dist[u] = dist[v] + 1;
                    queue.push_back(u);
                }
            }
        }
        dist
    }

    /// Graph diameter, or `None` when the graph is disconnected or empty.
    pub fn diameter(&self) -> Option<usize> {
        if self.n == 0 || !self.is_connected() {
            return None;
        }
        let mut best = 0;
        for v in 0..self.n {
            let ecc = self.bfs_distances(v).into_iter().max().unwrap();
            best = best.max(ecc);
        }
        Some(best)
    }

    /// One maximum clique, found by exact branch and bound.
    pub fn max_clique(&self) -> Vec<usize> {
        fn expand(g: &Graph, current: u64, candidates: u64, best: &mut u64) {
            if candidates == 0 {
                if current.count_ones() > best.count_ones() {
                    *best = current;
                }
                return;
            }
            if current.count_ones() + candidates.count_ones() <= best.count_ones() {
                return;
            }
            let mut cands = candidates;
            while cands != 0 {
                if current.count_ones() + cands.count_ones() <= best.count_ones() {
                    return;
                }
                let v = cands.trailing_zeros() as usize;
                cands &= cands - 1;
                expand(g, current | 1 << v, cands & g.adj[v], best);
            }
        }
        let mut best = 0u64;
        if self.n > 0 {
            let all = if self.n == 64 { u64::MAX } else { (1u64 << self.n) - 1 };
            expand(self, 0, all, &mut best);
        }
        BitIter(best).collect()
    }
}

struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

/// Cartesian product `g1 x g2`: vertex `(a, b)` maps to `a * g2.n() + b`;
/// `(a, b) ~ (a', b')` iff `a = a'` and `b ~ b'`, or `b = b'` and `a ~ a'`.
pub fn cartesian_product(g1: &Graph, g2: &Graph) -> Result<Graph, GraphError> {
    if g1.n() == 0 || g2.n() == 0 {
        return Err(GraphError::InvalidParams {
            builder: "cartesian_product".into(),
            reason: "both factors must be nonempty".into(),
        });
    }
    let n = g1
        .n()
        .checked_mul(g2.n())
        .filter(|&n| n <= MAX_VERTICES)
        .ok_or(GraphError::TooManyVertices(g1.n().saturating_mul(g2.n())))?;
    let mut g = Graph::new(n)?;
    for a in g1.vertices() {
        for (b, b2) in g2.edges() {
            g.add_edge(a * g2.n() + b, a * g2.n() + b2)?;
        }
    }
    for b in g2.vertices() {
        for (a, a2) in g1.edges() {
            g.add_edge(a * g2.n() + b, a2 * g2.n() + b)?;
        }
    }
    Ok(g)
}

/// The clone of `g`: its Cartesian product with `K_2`. The first copy of a
/// vertex `v` is `2v`, the second `2v + 1`; `2v -- 2v+1` are the matching
/// edges.
pub fn clone_graph(g: &Graph) -> Result<Graph, GraphError> {
    let k2 = builders::complete(2)?;
    let name = g.name().map(|s| format!("clone({s})"));
    let mut c = cartesian_product(g, &k2)?;
    if let Some(name) = name {
        c = c.with_name(name);
    }
    Ok(c)
}
