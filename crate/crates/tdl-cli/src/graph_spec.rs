//! Graph argument resolution: builtin builder specs like `petersen` or
//! `path:5`, or files in graph6 / edge-list format.

use std::path::Path;
use tdl::graphs::{self, Graph};

/// Loads a graph from a spec string: a file path (graph6 when the
/// extension is `.g6` or the content parses as graph6, edge list
/// otherwise) or a builder id with colon-separated parameters
/// (`path:5`, `grid:4,6`, `petersen`).
pub fn load_graph(spec: &str) -> Result<Graph, String> {
    let path = Path::new(spec);
    if path.exists() {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{spec}: {e}"))?;
        if path.extension().is_some_and(|e| e == "g6") {
            return graphs::from_graph6(&text).map_err(|e| format!("{spec}: {e}"));
        }
        // Edge list first (the documented default), then graph6.
        return graphs::from_edge_list(&text)
            .or_else(|el_err| graphs::from_graph6(&text).map_err(|_| format!("{spec}: {el_err}")));
    }
    let (name, params) = match spec.split_once(':') {
        Some((name, rest)) => {
            let params: Result<Vec<usize>, _> =
                rest.split(',').map(|p| p.trim().parse::<usize>()).collect();
            (name, params.map_err(|_| format!("invalid parameters in `{spec}`"))?)
        }
        None => (spec, Vec::new()),
    };
    graphs::build_named(name, &params).map_err(|e| e.to_string())
}

/// Stable cache key: the exact isomorphism certificate for small graphs,
/// otherwise a descriptor of the labeled edge set.
pub fn graph_key(g: &Graph) -> String {
    if let Ok(cert) = graphs::canonical_form(g) {
        return cert.to_hex();
    }
    // FNV-1a over the edge list; order n goes in the clear.
    let mut hash: u64 = 0xcbf29ce484222325;
    let mut mix = |byte: u8| {
        hash ^= byte as u64;
        hash = hash.wrapping_mul(0x100000001b3);
    };
    for (u, v) in g.edges() {
        for b in (u as u32).to_le_bytes().into_iter().chain((v as u32).to_le_bytes()) {
            mix(b);
        }
    }
    format!("edges-n{}-{:016x}", g.n(), hash)
}
