//! 3-element homogeneous subsets (triangles and independent triples) and the
//! three equivalent ways of saying that two graphs share them.

use std::fmt::Write as _;

use crate::bits;
use crate::edge_graph::{edge_graph, is_proper_coloring};
use crate::error::GraphError;
use crate::graph::Graph;

/// A set of 3-element vertex subsets, each stored ascending, kept in
/// lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TripleSet {
    n: usize,
    members: Vec<[usize; 3]>,
}

impl TripleSet {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[[usize; 3]] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, mut triple: [usize; 3]) -> bool {
        triple.sort_unstable();
        self.members.binary_search(&triple).is_ok()
    }

    /// One `"a b c"` line per triple.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for [a, b, c] in &self.members {
            let _ = writeln!(s, "{a} {b} {c}");
        }
        s
    }
}

/// Vertices `c` for which `{a, b, c}` is homogeneous in `g`, as a bitset.
fn closers(g: &Graph, a: usize, b: usize, out: &mut [u64]) {
    let (ra, rb) = (g.row(a), g.row(b));
    if g.has_edge(a, b) {
        bits::and_into(out, ra, rb);
    } else {
        for ((o, x), y) in out.iter_mut().zip(ra).zip(rb) {
            *o = !x & !y;
        }
        bits::mask_tail(out, g.order());
        bits::assign(out, a, false);
        bits::assign(out, b, false);
    }
}

/// All triples inducing a triangle or an independent set.
pub fn homogeneous_triples(g: &Graph) -> TripleSet {
    let n = g.order();
    let mut buf = bits::zeros(n);
    let mut members = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            closers(g, a, b, &mut buf);
            members.extend(bits::ones(&buf).filter(|&c| c > b).map(|c| [a, b, c]));
        }
    }
    TripleSet { n, members }
}

fn check_orders(g: &Graph, h: &Graph) -> Result<(), GraphError> {
    if g.order() == h.order() {
        Ok(())
    } else {
        Err(GraphError::OrderMismatch {
            left: g.order(),
            right: h.order(),
        })
    }
}

/// Whether `g` and `h` have exactly the same homogeneous triples.
pub fn same_3_homogeneous(g: &Graph, h: &Graph) -> Result<bool, GraphError> {
    check_orders(g, h)?;
    let n = g.order();
    let (mut x, mut y) = (bits::zeros(n), bits::zeros(n));
    for a in 0..n {
        for b in a + 1..n {
            closers(g, a, b, &mut x);
            closers(h, a, b, &mut y);
            // only c > b matters; lower bits are covered by other pairs
            for v in 0..=b {
                bits::assign(&mut x, v, false);
                bits::assign(&mut y, v, false);
            }
            if x != y {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// For all distinct `x, y, z`: `U(xy) = U(xz) != U(yz)` implies `G(xy) != G(xz)`.
pub fn lemma3_condition_b(g: &Graph, u: &Graph) -> Result<bool, GraphError> {
    check_orders(g, u)?;
    let n = g.order();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for (x, y, z) in [(a, b, c), (b, a, c), (c, a, b)] {
                    let (uxy, uxz, uyz) = (u.has_edge(x, y), u.has_edge(x, z), u.has_edge(y, z));
                    if uxy == uxz && uxy != uyz && g.has_edge(x, y) == g.has_edge(x, z) {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// `E(U) ∩ E(G)` and `E(U) \ E(G)` are independent in `S(U)`, and likewise
/// with the complement of `U` in place of `U`.
pub fn lemma3_condition_c(g: &Graph, u: &Graph) -> Result<bool, GraphError> {
    check_orders(g, u)?;
    for side in [u.clone(), u.complement()] {
        let s = edge_graph(&side)?;
        let in_g: Vec<u8> = s
            .labels()
            .iter()
            .map(|e| g.has_edge(e.lo(), e.hi()) as u8)
            .collect();
        if !is_proper_coloring(s.base(), &in_g) {
            return Ok(false);
        }
    }
    Ok(true)
}
