//! The edge-graph `S(U)`: one vertex per edge of `U`, with `xy ~ xz` exactly
//! when `yz` is not an edge of `U`.
//!
//! `U` is claw-free iff `S(U)` is triangle-free, since a triangle of `S(U)`
//! is three edges at a common center whose other ends are pairwise
//! non-adjacent.

use std::fmt::Write as _;

use crate::error::GraphError;
use crate::format::graph6_encode;
use crate::graph::{Graph, VertexPair};
use crate::structure::contains_claw;

/// Largest `U` accepted by [`edge_graph`].
pub const MAX_EDGE_GRAPH_SOURCE: usize = 64;

/// A graph whose vertices are labeled by pairs of vertices of another graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    base: Graph,
    labels: Vec<VertexPair>,
}

impl LabeledGraph {
    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn labels(&self) -> &[VertexPair] {
        &self.labels
    }

    pub fn into_base(self) -> Graph {
        self.base
    }

    /// Vertex carrying `label`. Labels are sorted, so this is a binary search.
    pub fn index_of(&self, label: VertexPair) -> Option<usize> {
        self.labels.binary_search(&label).ok()
    }

    /// graph6 of the base graph followed by one `i:(u,v)` line per vertex.
    pub fn to_text(&self) -> String {
        let mut s = graph6_encode(&self.base);
        s.push('\n');
        for (i, l) in self.labels.iter().enumerate() {
            let _ = writeln!(s, "{i}:{l}");
        }
        s
    }
}

/// Builds `S(U)` with vertices ordered lexicographically by label.
pub fn edge_graph(u: &Graph) -> Result<LabeledGraph, GraphError> {
    let n = u.order();
    if n > MAX_EDGE_GRAPH_SOURCE {
        return Err(GraphError::Oversize {
            what: "edge-graph construction",
            n,
            limit: MAX_EDGE_GRAPH_SOURCE,
        });
    }
    let labels: Vec<VertexPair> = u.edges().collect();
    let mut index = vec![usize::MAX; n * n];
    for (i, e) in labels.iter().enumerate() {
        index[e.lo() * n + e.hi()] = i;
        index[e.hi() * n + e.lo()] = i;
    }
    let mut base = Graph::new(labels.len())?;
    for x in 0..n {
        let nbrs: Vec<usize> = u.neighbors(x).collect();
        for (i, &y) in nbrs.iter().enumerate() {
            for &z in &nbrs[i + 1..] {
                if !u.has_edge(y, z) {
                    base.add_edge(index[x * n + y], index[x * n + z]);
                }
            }
        }
    }
    Ok(LabeledGraph { base, labels })
}

/// Checks the claw/triangle correspondence on one graph: `U` has no claw
/// exactly when `S(U)` has no triangle.
pub fn star_equivalence_check(u: &Graph) -> Result<bool, GraphError> {
    let s = edge_graph(u)?;
    Ok(contains_claw(u).is_none() == s.base().find_triangle().is_none())
}

/// Colors each vertex `{x, y}` of `S(complement(U))` by `c(x) + c(y) mod 2`,
/// given a proper 2-coloring `c` of `U`. Returned in the vertex order of
/// `edge_graph(&u.complement())`.
pub fn complement_edge_coloring(u: &Graph, coloring: &[u8]) -> Vec<u8> {
    u.complement()
        .edges()
        .map(|e| (coloring[e.lo()] + coloring[e.hi()]) & 1)
        .collect()
}

/// True when no edge of `g` joins two vertices of the same color.
pub fn is_proper_coloring(g: &Graph, coloring: &[u8]) -> bool {
    coloring.len() == g.order() && g.edges().all(|e| coloring[e.lo()] != coloring[e.hi()])
}
