//! Exact canonical forms for small graphs, and enumeration of connected
//! graphs up to isomorphism.
//!
//! Canonicalization takes the minimum upper-triangle adjacency bit string
//! over all vertex permutations. Exhaustive and trivially correct for
//! n <= 10; that is all the survey machinery needs.

use super::{Graph, GraphError};
use std::collections::HashSet;

/// Largest order accepted by [`canonical_form`].
pub const MAX_CANONICAL_VERTICES: usize = 10;

/// Canonical encoding of an isomorphism class. Two certificates are equal
/// iff the underlying graphs are isomorphic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GraphCertificate {
    n: u8,
    bits: u64,
}

impl GraphCertificate {
    pub fn order(&self) -> usize {
        self.n as usize
    }

    /// Canonical byte encoding: order byte followed by the big-endian packed
    /// upper-triangle bit string.
    pub fn bytes(&self) -> Vec<u8> {
        let mut out = vec![self.n];
        let nbits = (self.n as usize * (self.n as usize).saturating_sub(1)) / 2;
        let nbytes = nbits.div_ceil(8);
        for i in 0..nbytes {
            out.push((self.bits >> (8 * (nbytes - 1 - i))) as u8);
        }
        out
    }

    pub fn to_hex(&self) -> String {
        self.bytes().iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl std::fmt::Display for GraphCertificate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.to_hex())
    }
}

/// Upper-triangle bit index of the pair `{u, v}` (order-independent):
/// pairs are numbered (0,1), (0,2), (1,2), (0,3), ... as in column order.
#[inline]
fn pair_index(u: usize, v: usize) -> usize {
    let (lo, hi) = if u < v { (u, v) } else { (v, u) };
    hi * (hi - 1) / 2 + lo
}

fn bits_under_perm(g: &Graph, perm: &[usize]) -> u64 {
    let mut bits = 0u64;
    for (u, v) in g.edges() {
        bits |= 1 << pair_index(perm[u], perm[v]);
    }
    bits
}

/// Canonical form by minimization over all vertex permutations.
///
/// Errors when the graph has more than [`MAX_CANONICAL_VERTICES`] vertices.
pub fn canonical_form(g: &Graph) -> Result<GraphCertificate, GraphError> {
    let n = g.n();
    if n > MAX_CANONICAL_VERTICES {
        return Err(GraphError::TooLargeForCanonical { n, max: MAX_CANONICAL_VERTICES });
    }
    if n == 0 {
        return Ok(GraphCertificate { n: 0, bits: 0 });
    }
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = bits_under_perm(g, &perm);
    // Heap's algorithm over all n! permutations.
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            let bits = bits_under_perm(g, &perm);
            if bits < best {
                best = bits;
            }
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    Ok(GraphCertificate { n: n as u8, bits: best })
}

/// Rebuilds the graph a certificate encodes (vertices in canonical order).
pub fn certificate_graph(cert: &GraphCertificate) -> Graph {
    let n = cert.order();
    let mut g = Graph::new(n).unwrap();
    for v in 1..n {
        for u in 0..v {
            if (cert.bits >> pair_index(u, v)) & 1 == 1 {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// Exactly one representative per isomorphism class of connected simple
/// graphs on `n` vertices, sorted by certificate. Supports `1 <= n <= 7`.
///
/// Generation walks the edge-addition lattice: starting from the edgeless
/// graph, every graph with m+1 edges is reached by adding one edge to some
/// graph with m edges, deduplicating through canonical forms at each level.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>, GraphError> {
    if n == 0 || n > 7 {
        return Err(GraphError::OrderOutOfRange(n));
    }
    let empty = Graph::new(n)?;
    let empty_cert = canonical_form(&empty)?;
    let mut seen: HashSet<GraphCertificate> = HashSet::from([empty_cert]);
    let mut level: Vec<GraphCertificate> = vec![empty_cert];
    let mut connected: Vec<GraphCertificate> = if n == 1 { vec![empty_cert] } else { vec![] };

    while !level.is_empty() {
        let mut next = Vec::new();
        for cert in &level {
            let g = certificate_graph(cert);
            for u in 0..n {
                for v in u + 1..n {
                    if g.has_edge(u, v) {
                        continue;
                    }
                    let mut h = g.clone();
                    h.add_edge(u, v)?;
                    let hc = canonical_form(&h)?;
                    if seen.insert(hc) {
                        if h.is_connected() {
                            connected.push(hc);
                        }
                        next.push(hc);
                    }
                }
            }
        }
        level = next;
    }
    connected.sort_unstable();
    Ok(connected.iter().map(certificate_graph).collect())
}
