//! Constructors for the small named graphs that appear throughout the crate.

use crate::error::GraphError;
use crate::graph::Graph;

pub fn empty(n: usize) -> Result<Graph, GraphError> {
    Graph::new(n)
}

pub fn complete(n: usize) -> Result<Graph, GraphError> {
    Ok(Graph::new(n)?.complement())
}

/// Path `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Result<Graph, GraphError> {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

/// Cycle `0 - 1 - ... - (n-1) - 0`, `n >= 3`.
pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::InvalidOrder { what: "cycle", n });
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

fn fixed(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, edges.iter().copied()).expect("fixed edge list is valid")
}

/// `K_{1,3}` with center 0 and leaves 1, 2, 3.
pub fn claw() -> Graph {
    fixed(4, &[(0, 1), (0, 2), (0, 3)])
}

/// Triangle on 1, 2, 3 plus the isolated vertex 0.
pub fn co_claw() -> Graph {
    claw().complement()
}

/// `K_4` minus the edge 01.
pub fn diamond() -> Graph {
    fixed(4, &[(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
}

pub fn k3() -> Graph {
    fixed(3, &[(0, 1), (0, 2), (1, 2)])
}

/// Inner triangle 0, 1, 2; vertex 3 caps edge 01, vertex 4 caps 12 and
/// vertex 5 caps 20.
pub fn a6() -> Graph {
    fixed(
        6,
        &[
            (0, 1),
            (1, 2),
            (0, 2),
            (3, 0),
            (3, 1),
            (4, 1),
            (4, 2),
            (5, 2),
            (5, 0),
        ],
    )
}

/// The 3x3 rook's graph `K_3 □ K_3` (isomorphic to the Paley graph of order 9).
/// Cell `(i, j)` is vertex `3i + j`.
pub fn p9() -> Graph {
    let mut g = Graph::new(9).expect("9 vertices");
    for a in 0..9 {
        for b in a + 1..9 {
            if a / 3 == b / 3 || a % 3 == b % 3 {
                g.add_edge(a, b);
            }
        }
    }
    g
}

/// Paley graph of order 9 built over GF(9) = GF(3)[i], i^2 = -1: vertices
/// `a + b i` (index `3a + b`), adjacent when the difference is a nonzero square.
pub fn paley9() -> Graph {
    let mul = |(a, b): (usize, usize), (c, d): (usize, usize)| {
        ((a * c + 2 * b * d) % 3, (a * d + b * c) % 3)
    };
    let mut squares = [false; 9];
    for a in 0..3 {
        for b in 0..3 {
            if (a, b) != (0, 0) {
                let (s, t) = mul((a, b), (a, b));
                squares[3 * s + t] = true;
            }
        }
    }
    let mut g = Graph::new(9).expect("9 vertices");
    for x in 0..9 {
        for y in x + 1..9 {
            let (a, b) = ((x / 3 + 3 - y / 3) % 3, (x % 3 + 3 - y % 3) % 3);
            if squares[3 * a + b] {
                g.add_edge(x, y);
            }
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::are_isomorphic;

    #[test]
    fn a6_complement_shape() {
        let co = a6().complement();
        let edges: Vec<_> = co.edges().map(|e| (e.lo(), e.hi())).collect();
        assert_eq!(edges, vec![(0, 4), (1, 5), (2, 3), (3, 4), (3, 5), (4, 5)]);
        assert_eq!(a6().size(), 9);
    }

    #[test]
    fn p9_is_four_regular() {
        let g = p9();
        assert_eq!(g.size(), 18);
        assert!(g.degrees().iter().all(|&d| d == 4));
    }

    #[test]
    fn paley_realization_matches_rook_graph() {
        let p = paley9();
        assert_eq!(p.size(), 18);
        assert!(are_isomorphic(&p, &p9()).is_some());
    }

    #[test]
    fn small_identities() {
        assert_eq!(cycle(3).unwrap(), k3());
        assert!(cycle(2).is_err());
        assert_eq!(path(0).unwrap().order(), 0);
        assert_eq!(co_claw().size(), 3);
        assert_eq!(diamond().size(), 5);
        assert!(complete(3000).is_err());
    }
}
