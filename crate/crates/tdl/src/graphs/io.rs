//! Graph ingestion and emission: graph6 (bit-exact per the format
//! description distributed with nauty, orders up to 62) and a plain
//! edge-list text format (`n` on the first line, one `u v` pair per
//! subsequent line, 0-indexed).

use super::{Graph, GraphError};

const G6_HEADER: &str = ">>graph6<<";

/// Encodes a graph in graph6. Supports n <= 62 (single-byte order field).
pub fn to_graph6(g: &Graph) -> Result<String, GraphError> {
    let n = g.n();
    if n > 62 {
        return Err(GraphError::TooManyVertices(n));
    }
    let mut out = String::new();
    out.push((n as u8 + 63) as char);
    let mut bits: Vec<bool> = Vec::with_capacity(n * (n - 1) / 2);
    for v in 1..n {
        for u in 0..v {
            bits.push(g.has_edge(u, v));
        }
    }
    for chunk in bits.chunks(6) {
        let mut value = 0u8;
        for (i, &b) in chunk.iter().enumerate() {
            if b {
                value |= 1 << (5 - i);
            }
        }
        out.push((value + 63) as char);
    }
    Ok(out)
}

/// Decodes a graph6 string (optionally prefixed by the `>>graph6<<` header).
pub fn from_graph6(s: &str) -> Result<Graph, GraphError> {
    let s = s.trim();
    let s = s.strip_prefix(G6_HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    let parse_err = |message: &str| GraphError::Parse { line: 1, message: message.into() };
    if bytes.is_empty() {
        return Err(parse_err("empty graph6 string"));
    }
    if bytes[0] == 126 {
        return Err(parse_err("multi-byte graph6 orders (n > 62) are not supported"));
    }
    if !(63..=125).contains(&bytes[0]) {
        return Err(parse_err("invalid graph6 order byte"));
    }
    let n = (bytes[0] - 63) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() != 1 + nbytes {
        return Err(parse_err(&format!(
            "expected {} data bytes for order {n}, got {}",
            nbytes,
            bytes.len() - 1
        )));
    }
    let mut g = Graph::new(n)?;
    let mut idx = 0usize;
    'outer: for v in 1..n {
        for u in 0..v {
            let byte = bytes[1 + idx / 6];
            if !(63..=126).contains(&byte) {
                return Err(parse_err("invalid graph6 data byte"));
            }
            let bit = (byte - 63) >> (5 - idx % 6) & 1;
            if bit == 1 {
                g.add_edge(u, v)?;
            }
            idx += 1;
            if idx == nbits {
                break 'outer;
            }
        }
    }
    Ok(g)
}

/// Emits the plain edge-list format.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parses the plain edge-list format. Blank lines and `#` comments are
/// skipped; errors carry 1-based line numbers.
pub fn from_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut graph: Option<Graph> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        match graph {
            None => {
                let n: usize = content.parse().map_err(|_| GraphError::Parse {
                    line,
                    message: format!("expected vertex count, got `{content}`"),
                })?;
                graph = Some(Graph::new(n)?);
            }
            Some(ref mut g) => {
                let mut parts = content.split_whitespace();
                let mut next = |what: &str| -> Result<usize, GraphError> {
                    parts
                        .next()
                        .ok_or_else(|| GraphError::Parse { line, message: format!("missing {what}") })?
                        .parse()
                        .map_err(|_| GraphError::Parse { line, message: format!("invalid {what}") })
                };
                let u = next("endpoint")?;
                let v = next("endpoint")?;
                if parts.next().is_some() {
                    return Err(GraphError::Parse { line, message: "trailing tokens after edge".into() });
                }
                g.add_edge(u, v).map_err(|e| GraphError::Parse { line, message: e.to_string() })?;
            }
        }
    }
    graph.ok_or(GraphError::Parse { line: 1, message: "missing vertex count line".into() })
}
