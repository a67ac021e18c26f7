//! Named graph builders with fixed, documented vertex numberings, so that
//! labeling fixtures map deterministically onto vertices.

use super::{Graph, GraphError};

fn invalid(builder: &str, reason: impl Into<String>) -> GraphError {
    GraphError::InvalidParams { builder: builder.into(), reason: reason.into() }
}

/// Path `P_n`, vertices `0..n` in path order. Requires `n >= 1`.
pub fn path(n: usize) -> Result<Graph, GraphError> {
    if n < 1 {
        return Err(invalid("path", "need n >= 1"));
    }
    let mut g = Graph::new(n)?.with_name(format!("P{n}"));
    for v in 0..n - 1 {
        g.add_edge(v, v + 1)?;
    }
    Ok(g)
}

/// Cycle `C_n`, vertices `0..n` in cyclic order. Requires `n >= 3`.
pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(invalid("cycle", "need n >= 3"));
    }
    let mut g = Graph::new(n)?.with_name(format!("C{n}"));
    for v in 0..n {
        g.add_edge(v, (v + 1) % n)?;
    }
    Ok(g)
}

/// Complete graph `K_n`. Requires `n >= 1`.
pub fn complete(n: usize) -> Result<Graph, GraphError> {
    if n < 1 {
        return Err(invalid("complete", "need n >= 1"));
    }
    let mut g = Graph::new(n)?.with_name(format!("K{n}"));
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v)?;
        }
    }
    Ok(g)
}

/// Star `K_{1,m}`: center 0, leaves `1..=m`.
pub fn star(m: usize) -> Result<Graph, GraphError> {
    let mut g = Graph::new(m + 1)?.with_name(format!("K1,{m}"));
    for leaf in 1..=m {
        g.add_edge(0, leaf)?;
    }
    Ok(g)
}

/// Hypercube `Q_d`: vertices are the `2^d` bit strings, adjacent when they
/// differ in exactly one bit. `Q_0` is a single vertex.
pub fn hypercube(d: usize) -> Result<Graph, GraphError> {
    if d > 6 {
        return Err(invalid("hypercube", "need d <= 6 (vertex cap)"));
    }
    let n = 1usize << d;
    let mut g = Graph::new(n)?.with_name(format!("Q{d}"));
    for v in 0..n {
        for bit in 0..d {
            let u = v ^ (1 << bit);
            if u > v {
                g.add_edge(v, u)?;
            }
        }
    }
    Ok(g)
}

/// The Petersen graph. Vertices 0..5 form the outer 5-cycle, 5..10 the inner
/// pentagram (`5+i ~ 5+((i+2) mod 5)`), with spokes `i ~ 5+i`.
pub fn petersen() -> Graph {
    let mut g = Graph::new(10).unwrap().with_name("Petersen");
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5).unwrap();
        g.add_edge(5 + i, 5 + (i + 2) % 5).unwrap();
        g.add_edge(i, 5 + i).unwrap();
    }
    g
}

/// The triforce graph missing one edge: three stacked triangles on six
/// vertices with 8 edges. Numbering: 0 apex; 1, 2 middle row; 3, 4, 5 bottom
/// row, with the 3--4-side triangle edge 1--3 absent.
pub fn triforce() -> Graph {
    let mut g = Graph::new(6).unwrap().with_name("triforce");
    for (u, v) in [(0, 1), (0, 2), (1, 2), (1, 4), (2, 4), (2, 5), (3, 4), (4, 5)] {
        g.add_edge(u, v).unwrap();
    }
    g
}

/// Graph `I`: two `K_4`s joined by a single bridge. Vertices 0..4 form one
/// `K_4`, 4..8 the other, with bridge 3--6.
pub fn graph_i() -> Graph {
    let mut g = Graph::new(8).unwrap().with_name("I");
    for base in [0, 4] {
        for u in base..base + 4 {
            for v in u + 1..base + 4 {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g.add_edge(3, 6).unwrap();
    g
}

/// Complete binary tree of depth `h` in heap order: children of `v` are
/// `2v + 1` and `2v + 2`. Depth 0 is a single vertex.
pub fn binary_tree(h: usize) -> Result<Graph, GraphError> {
    if h > 5 {
        return Err(invalid("binary_tree", "need h <= 5 (vertex cap)"));
    }
    let n = (1usize << (h + 1)) - 1;
    let mut g = Graph::new(n)?.with_name(format!("BinTree{h}"));
    for v in 0..n {
        for c in [2 * v + 1, 2 * v + 2] {
            if c < n {
                g.add_edge(v, c)?;
            }
        }
    }
    Ok(g)
}

/// Square-lattice patch with `rows x cols` vertices; vertex `(r, c)` is
/// `r * cols + c`, with the usual grid edges.
pub fn grid(rows: usize, cols: usize) -> Result<Graph, GraphError> {
    if rows < 1 || cols < 1 {
        return Err(invalid("grid", "need rows, cols >= 1"));
    }
    let n = rows
        .checked_mul(cols)
        .filter(|&n| n <= super::MAX_VERTICES)
        .ok_or_else(|| invalid("grid", "patch too large"))?;
    let mut g = Graph::new(n)?.with_name(format!("Grid{rows}x{cols}"));
    for r in 0..rows {
        for c in 0..cols {
            if c + 1 < cols {
                g.add_edge(r * cols + c, r * cols + c + 1)?;
            }
            if r + 1 < rows {
                g.add_edge(r * cols + c, (r + 1) * cols + c)?;
            }
        }
    }
    Ok(g)
}

/// Dispatches a builder by id. Parameter counts are checked per builder.
///
/// Supported ids: `path`, `cycle`, `complete`, `star`, `hypercube`,
/// `petersen`, `triforce`, `graph_i`, `binary_tree`, `grid`.
pub fn build_named(name: &str, params: &[usize]) -> Result<Graph, GraphError> {
    let want = |count: usize| -> Result<(), GraphError> {
        if params.len() == count {
            Ok(())
        } else {
            Err(invalid(name, format!("expected {count} parameter(s), got {}", params.len())))
        }
    };
    match name {
        "path" => {
            want(1)?;
            path(params[0])
        }
        "cycle" => {
            want(1)?;
            cycle(params[0])
        }
        "complete" => {
            want(1)?;
            complete(params[0])
        }
        "star" => {
            want(1)?;
            star(params[0])
        }
        "hypercube" => {
            want(1)?;
            hypercube(params[0])
        }
        "petersen" => {
            want(0)?;
            Ok(petersen())
        }
        "triforce" => {
            want(0)?;
            Ok(triforce())
        }
        "graph_i" => {
            want(0)?;
            Ok(graph_i())
        }
        "binary_tree" => {
            want(1)?;
            binary_tree(params[0])
        }
        "grid" => {
            want(2)?;
            grid(params[0], params[1])
        }
        other => Err(GraphError::UnknownBuilder(other.into())),
    }
}
