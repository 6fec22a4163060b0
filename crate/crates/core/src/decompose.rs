//! Writing a graph `U` as a Boolean sum `G + G'` of two graphs with the same
//! homogeneous triples.
//!
//! Two constructions are provided. The generic one 2-colors `S(U)` and
//! `S(complement(U))` and reads `G`, `G'` off the color classes. The explicit
//! one handles graphs whose components (or whose complement's components) are
//! paths and even cycles, using the fixed families `M_n`, `M'_n`, `M''_n` on
//! an enumeration `x_0, ..., x_{n-1}` of each component.

use std::fmt;

use crate::edge_graph::edge_graph;
use crate::error::GraphError;
use crate::format::graph6_encode;
use crate::graph::{ComponentShape, Graph};
use crate::homogeneous::same_3_homogeneous;
use crate::iso::find_induced_embedding;
use crate::named;

/// A triple `(G, G', U)` meant to satisfy `G + G' = U` with `G` and `G'`
/// sharing their homogeneous triples. Use [`verify_decomposition`] to check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub g: Graph,
    pub gp: Graph,
    pub u: Graph,
}

impl fmt::Display for Decomposition {
    /// Three graph6 lines `G`, `G'`, `U`, then `ok` or `FAIL`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", graph6_encode(&self.g))?;
        writeln!(f, "{}", graph6_encode(&self.gp))?;
        writeln!(f, "{}", graph6_encode(&self.u))?;
        let flag = if verify_decomposition(self) {
            "ok"
        } else {
            "FAIL"
        };
        write!(f, "{flag}")
    }
}

pub fn verify_decomposition(d: &Decomposition) -> bool {
    d.g.boolean_sum(&d.gp).is_ok_and(|s| s == d.u)
        && same_3_homogeneous(&d.g, &d.gp).unwrap_or(false)
}

/// Both `S(U)` and `S(complement(U))` are bipartite.
pub fn property2(u: &Graph) -> Result<bool, GraphError> {
    Ok(edge_graph(u)?.base().is_bipartite() && edge_graph(&u.complement())?.base().is_bipartite())
}

/// Which disjunct of the structural description of `U` holds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Property3Case {
    /// Induced embedding of `U` into `P_9`.
    InducedP9(Vec<usize>),
    /// Components of `U`: paths and even cycles.
    Components(Vec<ComponentShape>),
    /// Components of the complement: paths and even cycles.
    ComplementComponents(Vec<ComponentShape>),
}

fn paths_and_even_cycles(g: &Graph) -> Option<Vec<ComponentShape>> {
    let shapes = g.component_shapes();
    shapes
        .iter()
        .all(|s| match s {
            ComponentShape::Path(_) => true,
            ComponentShape::Cycle(k) => k % 2 == 0,
            ComponentShape::Other => false,
        })
        .then_some(shapes)
}

/// Checks, in order: components of `U`, components of the complement,
/// induced subgraph of `P_9`.
pub fn property3(u: &Graph) -> Option<Property3Case> {
    if let Some(shapes) = paths_and_even_cycles(u) {
        return Some(Property3Case::Components(shapes));
    }
    if let Some(shapes) = paths_and_even_cycles(&u.complement()) {
        return Some(Property3Case::ComplementComponents(shapes));
    }
    if u.order() <= 9 {
        return find_induced_embedding(u, &named::p9()).map(Property3Case::InducedP9);
    }
    None
}

/// Same-parity pairs of `0..n`.
fn parity_cliques(g: &mut Graph) {
    let n = g.order();
    for a in 0..n {
        for b in (a + 2..n).step_by(2) {
            g.add_edge(a, b);
        }
    }
}

/// `M_n`: same-parity pairs plus `x_{2i} x_{2i+1}`.
pub fn build_m(n: usize) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(GraphError::InvalidOrder { what: "M_n", n });
    }
    let mut g = Graph::new(n)?;
    parity_cliques(&mut g);
    for a in (0..n.saturating_sub(1)).step_by(2) {
        g.add_edge(a, a + 1);
    }
    Ok(g)
}

/// `M'_n`: same-parity pairs plus `x_{2i+1} x_{2i+2}`.
pub fn build_mp(n: usize) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(GraphError::InvalidOrder { what: "M'_n", n });
    }
    let mut g = Graph::new(n)?;
    parity_cliques(&mut g);
    for a in (1..n.saturating_sub(1)).step_by(2) {
        g.add_edge(a, a + 1);
    }
    Ok(g)
}

/// `M''_n` for even `n >= 4`: `M'_n` plus `x_0 x_{n-1}`.
pub fn build_mpp(n: usize) -> Result<Graph, GraphError> {
    if n < 4 || n % 2 == 1 {
        return Err(GraphError::InvalidOrder { what: "M''_n", n });
    }
    let mut g = build_mp(n)?;
    g.add_edge(0, n - 1);
    Ok(g)
}

/// Vertices of a path or cycle component listed along it: a path from its
/// smaller endpoint, a cycle from its smallest vertex towards the smaller
/// neighbor.
fn walk(g: &Graph, part: &[usize], shape: ComponentShape) -> Vec<usize> {
    let start = match shape {
        ComponentShape::Path(_) => *part
            .iter()
            .find(|&&v| g.degree(v) <= 1)
            .expect("a path has an endpoint"),
        _ => part[0],
    };
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while order.len() < part.len() {
        let next = g
            .neighbors(cur)
            .find(|&w| w != prev && w != start)
            .expect("walk continues inside the component");
        order.push(next);
        prev = cur;
        cur = next;
    }
    order
}

/// Explicit construction when every component of `u` is a path or an even cycle.
fn explicit_on_components(u: &Graph) -> Decomposition {
    let n = u.order();
    let mut g = Graph::new(n).expect("same order as u");
    let mut gp = g.clone();
    let mut parity = vec![0usize; n];
    for part in u.connected_components() {
        let shape = u.component_shape(&part);
        let order = walk(u, &part, shape);
        let k = order.len();
        let (local, local_p) = match shape {
            ComponentShape::Cycle(_) => (build_m(k), build_mpp(k)),
            _ => (build_m(k), build_mp(k)),
        };
        for (src, dst) in [(local, &mut g), (local_p, &mut gp)] {
            for e in src.expect("component order is valid").edges() {
                dst.add_edge(order[e.lo()], order[e.hi()]);
            }
        }
        for (i, &v) in order.iter().enumerate() {
            parity[v] = i % 2;
        }
    }
    let comp = u.connected_components().membership(n);
    for a in 0..n {
        for b in a + 1..n {
            if comp[a] != comp[b] && parity[a] == parity[b] {
                g.add_edge(a, b);
                gp.add_edge(a, b);
            }
        }
    }
    Decomposition {
        g,
        gp,
        u: u.clone(),
    }
}

/// Decomposes `u` with the explicit path/cycle construction when its
/// components, or its complement's, are paths and even cycles; falls back to
/// [`decompose_generic`] when `u` is only known to embed in `P_9`. `None`
/// when no disjunct holds.
pub fn decompose_explicit(u: &Graph) -> Option<Decomposition> {
    match property3(u)? {
        Property3Case::Components(_) => Some(explicit_on_components(u)),
        Property3Case::ComplementComponents(_) => {
            // complement(U) = complement(G) + G'
            let d = explicit_on_components(&u.complement());
            Some(Decomposition {
                g: d.g.complement(),
                gp: d.gp,
                u: u.clone(),
            })
        }
        Property3Case::InducedP9(_) => decompose_generic(u).ok().flatten(),
    }
}

/// Generic construction from 2-colorings of `S(U)` and `S(complement(U))`:
/// `E(G) = A_1 ∪ B_1` and `E(G') = A_2 ∪ B_1`, where `A_1`/`A_2` are the color
/// classes on the edges of `U` and `B_1` is the first class on the non-edges.
/// Each component of an edge-graph gets color 0 on its lexicographically
/// smallest label. `Ok(None)` when either edge-graph is not bipartite.
pub fn decompose_generic(u: &Graph) -> Result<Option<Decomposition>, GraphError> {
    let s = edge_graph(u)?;
    let t = edge_graph(&u.complement())?;
    let (Some(cs), Some(ct)) = (s.base().two_coloring(), t.base().two_coloring()) else {
        return Ok(None);
    };
    let n = u.order();
    let mut g = Graph::new(n)?;
    let mut gp = Graph::new(n)?;
    for (e, &c) in s.labels().iter().zip(&cs) {
        if c == 0 {
            g.add_edge(e.lo(), e.hi());
        } else {
            gp.add_edge(e.lo(), e.hi());
        }
    }
    for (e, &c) in t.labels().iter().zip(&ct) {
        if c == 0 {
            g.add_edge(e.lo(), e.hi());
            gp.add_edge(e.lo(), e.hi());
        }
    }
    Ok(Some(Decomposition {
        g,
        gp,
        u: u.clone(),
    }))
}
