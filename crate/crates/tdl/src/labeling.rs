//! The labeling data model and the exact validity checker.
//!
//! Only vertex labels are stored; edge labels are always derived as the
//! absolute difference of endpoint labels. A labeling is proper exactly when
//! it contains none of the four violation patterns below:
//!
//! - `AdjacentEqual`: an edge whose endpoints share a label (the derived
//!   edge label would be 0, and adjacent vertices must differ anyway);
//! - `Double`: an edge labeled `(a, 2a)`, which forces the edge label to
//!   collide with the smaller endpoint label;
//! - `Sandwich`: a path `u - v - w` with equal endpoint labels, which forces
//!   the two incident edge labels to collide;
//! - `Staircase`: a path `u - v - w` whose labels form an arithmetic
//!   progression, which also forces an edge-label collision.

use crate::graphs::Graph;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// Errors for labeling construction and use.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LabelingError {
    MissingVertexLabel(usize),
    /// Labels must be positive integers.
    NonPositiveLabel { vertex: usize },
    EmptyLabeling,
    SizeMismatch { labeling: usize, graph: usize },
    Parse { line: usize, message: String },
}

impl fmt::Display for LabelingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LabelingError::MissingVertexLabel(v) => write!(f, "vertex {v} has no label"),
            LabelingError::NonPositiveLabel { vertex } => {
                write!(f, "vertex {vertex} must carry a positive label")
            }
            LabelingError::EmptyLabeling => write!(f, "labeling is empty"),
            LabelingError::SizeMismatch { labeling, graph } => {
                write!(f, "labeling covers {labeling} vertices but the graph has {graph}")
            }
            LabelingError::Parse { line, message } => {
                write!(f, "parse error on line {line}: {message}")
            }
        }
    }
}

impl std::error::Error for LabelingError {}

/// A map from vertices `0..n` to positive integer labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexLabeling {
    labels: Vec<u32>,
}

impl VertexLabeling {
    /// Builds a labeling from per-vertex labels; all must be positive.
    pub fn new(labels: Vec<u32>) -> Result<VertexLabeling, LabelingError> {
        if let Some(v) = labels.iter().position(|&l| l == 0) {
            return Err(LabelingError::NonPositiveLabel { vertex: v });
        }
        Ok(VertexLabeling { labels })
    }

    /// Builds from `(vertex, label)` pairs, requiring every vertex `0..n`
    /// to be covered exactly once.
    pub fn from_pairs(n: usize, pairs: &[(usize, u32)]) -> Result<VertexLabeling, LabelingError> {
        let mut labels = vec![0u32; n];
        for &(v, l) in pairs {
            if v >= n {
                return Err(LabelingError::MissingVertexLabel(v));
            }
            if l == 0 {
                return Err(LabelingError::NonPositiveLabel { vertex: v });
            }
            labels[v] = l;
        }
        if let Some(v) = labels.iter().position(|&l| l == 0) {
            return Err(LabelingError::MissingVertexLabel(v));
        }
        Ok(VertexLabeling { labels })
    }

    #[inline]
    pub fn get(&self, v: usize) -> u32 {
        self.labels[v]
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    /// Maximum assigned label. Errors on an empty labeling.
    pub fn max_label(&self) -> Result<u32, LabelingError> {
        self.labels.iter().copied().max().ok_or(LabelingError::EmptyLabeling)
    }

    /// The set of labels used, deduplicated and sorted.
    pub fn label_set(&self) -> Vec<u32> {
        let mut set = self.labels.clone();
        set.sort_unstable();
        set.dedup();
        set
    }

    fn check_covers(&self, g: &Graph) -> Result<(), LabelingError> {
        if self.labels.len() != g.n() {
            return Err(LabelingError::SizeMismatch { labeling: self.labels.len(), graph: g.n() });
        }
        Ok(())
    }

    /// One `vertex label` pair per line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (v, l) in self.labels.iter().enumerate() {
            out.push_str(&format!("{v} {l}\n"));
        }
        out
    }

    /// Parses the `vertex label` line format. The vertex set is inferred as
    /// `0..=max vertex mentioned`; every vertex must be covered.
    pub fn from_text(text: &str) -> Result<VertexLabeling, LabelingError> {
        let mut pairs: Vec<(usize, u32)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.trim();
            if content.is_empty() || content.starts_with('#') {
                continue;
            }
            let mut parts = content.split_whitespace();
            let v: usize = parts
                .next()
                .unwrap()
                .parse()
                .map_err(|_| LabelingError::Parse { line, message: "invalid vertex id".into() })?;
            let l: u32 = parts
                .next()
                .ok_or_else(|| LabelingError::Parse { line, message: "missing label".into() })?
                .parse()
                .map_err(|_| LabelingError::Parse { line, message: "invalid label".into() })?;
            if parts.next().is_some() {
                return Err(LabelingError::Parse { line, message: "trailing tokens".into() });
            }
            pairs.push((v, l));
        }
        if pairs.is_empty() {
            return Err(LabelingError::EmptyLabeling);
        }
        let n = pairs.iter().map(|&(v, _)| v).max().unwrap() + 1;
        VertexLabeling::from_pairs(n, &pairs)
    }
}

/// The four violation patterns of an improper labeling.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ViolationKind {
    AdjacentEqual,
    Double,
    Sandwich,
    Staircase,
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ViolationKind::AdjacentEqual => "adjacent-equal",
            ViolationKind::Double => "double",
            ViolationKind::Sandwich => "sandwich",
            ViolationKind::Staircase => "staircase",
        };
        f.write_str(s)
    }
}

/// A witnessed violation: the two or three vertices realizing the pattern.
/// For `Sandwich` and `Staircase` the middle vertex is the second entry.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub witness: Vec<usize>,
}

/// Derived edge labels: each edge `(u, v)` with `u < v` maps to
/// `|f(u) - f(v)|`.
pub fn edge_labels(
    g: &Graph,
    f: &VertexLabeling,
) -> Result<BTreeMap<(usize, usize), u32>, LabelingError> {
    f.check_covers(g)?;
    Ok(g.edges()
        .into_iter()
        .map(|(u, v)| ((u, v), f.get(u).abs_diff(f.get(v))))
        .collect())
}

/// Returns every violation, exhaustively, sorted by (kind, witness).
/// An empty result certifies a proper total difference labeling.
///
/// Pair patterns are scanned over edges; triple patterns iterate middle
/// vertices and neighbor pairs, which is O(sum of squared degrees).
pub fn validate(g: &Graph, f: &VertexLabeling) -> Result<Vec<Violation>, LabelingError> {
    f.check_covers(g)?;
    let mut out = Vec::new();
    for (u, v) in g.edges() {
        let (a, b) = (f.get(u), f.get(v));
        if a == b {
            out.push(Violation { kind: ViolationKind::AdjacentEqual, witness: vec![u, v] });
        }
        if a == 2 * b || b == 2 * a {
            out.push(Violation { kind: ViolationKind::Double, witness: vec![u, v] });
        }
    }
    for mid in g.vertices() {
        let nbrs: Vec<usize> = g.neighbors(mid).collect();
        for (i, &u) in nbrs.iter().enumerate() {
            for &w in &nbrs[i + 1..] {
                let (a, b, c) = (f.get(u), f.get(mid), f.get(w));
                if a == c {
                    out.push(Violation { kind: ViolationKind::Sandwich, witness: vec![u, mid, w] });
                } else if a + c == 2 * b {
                    out.push(Violation { kind: ViolationKind::Staircase, witness: vec![u, mid, w] });
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

/// True when `f` is a proper total difference labeling of `g`.
pub fn is_proper(g: &Graph, f: &VertexLabeling) -> Result<bool, LabelingError> {
    Ok(validate(g, f)?.is_empty())
}
