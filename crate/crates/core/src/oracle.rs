//! Brute-force reference implementations.
//!
//! Everything here is deliberately naive and shares no code path with the
//! fast implementations it is used to check (bitset detectors, BFS coloring,
//! backtracking isomorphism). Only suitable for small graphs.

use crate::graph::{ComponentShape, Graph};

fn subsets4(n: usize) -> impl Iterator<Item = [usize; 4]> {
    (0..n).flat_map(move |a| {
        (a + 1..n)
            .flat_map(move |b| (b + 1..n).flat_map(move |c| (c + 1..n).map(move |d| [a, b, c, d])))
    })
}

/// Induced degrees inside a 4-set.
fn local_degrees(g: &Graph, s: [usize; 4]) -> [usize; 4] {
    let mut deg = [0; 4];
    for i in 0..4 {
        for j in 0..4 {
            if i != j && g.has_edge(s[i], s[j]) {
                deg[i] += 1;
            }
        }
    }
    deg
}

fn any_4set(g: &Graph, pred: impl Fn([usize; 4]) -> bool) -> bool {
    subsets4(g.order()).any(|s| pred(local_degrees(g, s)))
}

/// Some 4 vertices induce a star `K_{1,3}`.
pub fn has_claw(g: &Graph) -> bool {
    any_4set(g, |d| {
        let mut d = d;
        d.sort_unstable();
        d == [1, 1, 1, 3]
    })
}

/// Some 4 vertices induce a triangle plus an isolated vertex.
pub fn has_co_claw(g: &Graph) -> bool {
    any_4set(g, |d| {
        let mut d = d;
        d.sort_unstable();
        d == [0, 2, 2, 2]
    })
}

/// Some 4 vertices induce exactly five edges.
pub fn has_diamond(g: &Graph) -> bool {
    any_4set(g, |d| d.iter().sum::<usize>() == 10)
}

pub fn has_triangle(g: &Graph) -> bool {
    let n = g.order();
    (0..n).any(|a| {
        (a + 1..n)
            .any(|b| g.has_edge(a, b) && (b + 1..n).any(|c| g.has_edge(a, c) && g.has_edge(b, c)))
    })
}

/// Homogeneous triples by direct inspection, ascending and lexicographic.
pub fn homogeneous_triples(g: &Graph) -> Vec<[usize; 3]> {
    let n = g.order();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let e = [g.has_edge(a, b), g.has_edge(a, c), g.has_edge(b, c)];
                if e.iter().all(|&x| x) || e.iter().all(|&x| !x) {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

/// Tries all `2^n` colorings.
pub fn is_two_colorable(g: &Graph) -> bool {
    let n = g.order();
    assert!(n <= 24, "brute-force coloring is for small graphs");
    (0u32..1 << n).any(|c| g.edges().all(|e| (c >> e.lo() & 1) != (c >> e.hi() & 1)))
}

/// Tries every permutation (Heap's algorithm).
pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    let n = g.order();
    if n != h.order() || g.size() != h.size() {
        return false;
    }
    assert!(n <= 10, "brute-force isomorphism is for small graphs");
    let edges: Vec<_> = g.edges().collect();
    let mut perm: Vec<usize> = (0..n).collect();
    let check = |p: &[usize]| edges.iter().all(|e| h.has_edge(p[e.lo()], p[e.hi()]));
    if check(&perm) {
        return true;
    }
    let mut c = vec![0; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            if check(&perm) {
                return true;
            }
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    false
}

/// Shape of a connected component found by walking it: from an endpoint for
/// a path, around from any vertex for a cycle.
pub fn walk_shape(g: &Graph, part: &[usize]) -> ComponentShape {
    let k = part.len();
    if k == 1 {
        return ComponentShape::Path(1);
    }
    let start = part
        .iter()
        .copied()
        .find(|&v| g.degree(v) == 1)
        .unwrap_or(part[0]);
    let mut visited = vec![start];
    let mut prev = None;
    let mut cur = start;
    loop {
        let mut next: Vec<usize> = g.neighbors(cur).filter(|&w| Some(w) != prev).collect();
        if prev.is_none() && next.len() == 2 && g.degree(start) == 2 {
            next.truncate(1);
        }
        if next.len() != 1 {
            break;
        }
        let w = next[0];
        if w == start {
            let closes = visited.len() == k && k >= 3 && g.degree(start) == 2;
            return if closes {
                ComponentShape::Cycle(k)
            } else {
                ComponentShape::Other
            };
        }
        if visited.contains(&w) {
            return ComponentShape::Other;
        }
        visited.push(w);
        prev = Some(cur);
        cur = w;
    }
    // dead end: a path only if we walked from one endpoint to another
    let is_path = visited.len() == k && g.degree(start) == 1 && g.degree(cur) == 1;
    if is_path {
        ComponentShape::Path(k)
    } else {
        ComponentShape::Other
    }
}

/// Line graphs of connected triangle-free graphs, used to decide whether a
/// small graph is the line graph of a triangle-free graph.
#[derive(Debug, Clone)]
pub struct LineGraphRoots {
    /// `by_size[m]`: pairwise non-isomorphic line graphs of connected
    /// triangle-free graphs with `m` edges.
    by_size: Vec<Vec<Graph>>,
}

impl LineGraphRoots {
    /// Enumerates every graph with `m <= max_edges` edges on `m + 1` vertices,
    /// keeps the triangle-free ones whose edges form one connected piece, and
    /// records their line graphs up to isomorphism.
    pub fn new(max_edges: usize) -> Self {
        let mut by_size = vec![Vec::new(); max_edges + 1];
        by_size[0].push(Graph::new(0).expect("empty graph"));
        for (m, bucket) in by_size.iter_mut().enumerate().skip(1) {
            let v = m + 1;
            let pairs: Vec<(usize, usize)> = (0..v)
                .flat_map(|a| (a + 1..v).map(move |b| (a, b)))
                .collect();
            for chosen in combinations(pairs.len(), m) {
                let root = Graph::from_edges(v, chosen.iter().map(|&i| pairs[i])).expect("valid");
                if has_triangle(&root) || !edges_connected(&root) {
                    continue;
                }
                let line = naive_line_graph(&root);
                if !bucket.iter().any(|h| are_isomorphic(h, &line)) {
                    bucket.push(line);
                }
            }
        }
        Self { by_size }
    }

    pub fn max_edges(&self) -> usize {
        self.by_size.len() - 1
    }

    /// Whether `g` is the line graph of some triangle-free graph. Every
    /// component of `g` must be the line graph of a connected piece of the root.
    pub fn is_line_graph_of_triangle_free(&self, g: &Graph) -> bool {
        assert!(
            g.order() <= self.max_edges(),
            "oracle built for smaller graphs"
        );
        g.connected_components().iter().all(|part| {
            let (c, _) = g.induced(part).expect("component vertices are valid");
            self.by_size[part.len()]
                .iter()
                .any(|h| are_isomorphic(h, &c))
        })
    }
}

fn edges_connected(g: &Graph) -> bool {
    let touched: Vec<usize> = (0..g.order()).filter(|&v| g.degree(v) > 0).collect();
    let Some(&first) = touched.first() else {
        return true;
    };
    let mut seen = vec![false; g.order()];
    let mut stack = vec![first];
    seen[first] = true;
    while let Some(v) = stack.pop() {
        for w in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    touched.iter().all(|&v| seen[v])
}

fn naive_line_graph(root: &Graph) -> Graph {
    let edges: Vec<_> = root.edges().collect();
    let mut l = Graph::new(edges.len()).expect("small");
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            let (e, f) = (edges[i], edges[j]);
            if e.lo() == f.lo() || e.lo() == f.hi() || e.hi() == f.lo() || e.hi() == f.hi() {
                l.add_edge(i, j);
            }
        }
    }
    l
}

/// All `r`-element index subsets of `0..n`, ascending.
fn combinations(n: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(r);
    fn rec(start: usize, n: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..=n - (r - cur.len()) {
            cur.push(i);
            rec(i + 1, n, r, cur, out);
            cur.pop();
        }
    }
    if r <= n {
        rec(0, n, r, &mut cur, &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    #[test]
    fn detectors_on_named_graphs() {
        assert!(has_claw(&named::claw()));
        assert!(!has_claw(&named::co_claw()));
        assert!(has_co_claw(&named::co_claw()));
        assert!(has_diamond(&named::diamond()));
        assert!(!has_diamond(&named::complete(4).unwrap()));
        assert!(has_triangle(&named::k3()));
    }

    #[test]
    fn walking() {
        let g = named::cycle(5)
            .unwrap()
            .disjoint_union(&named::path(3).unwrap())
            .unwrap();
        assert_eq!(walk_shape(&g, &[0, 1, 2, 3, 4]), ComponentShape::Cycle(5));
        assert_eq!(walk_shape(&g, &[5, 6, 7]), ComponentShape::Path(3));
        assert_eq!(
            walk_shape(&named::claw(), &[0, 1, 2, 3]),
            ComponentShape::Other
        );
        assert_eq!(
            walk_shape(&named::diamond(), &[0, 1, 2, 3]),
            ComponentShape::Other
        );
    }

    #[test]
    fn heap_permutations_cover_all() {
        let c5 = named::cycle(5).unwrap();
        assert!(are_isomorphic(&c5, &c5.complement()));
        assert!(!are_isomorphic(&named::path(4).unwrap(), &named::claw()));
    }

    #[test]
    fn small_roots() {
        let roots = LineGraphRoots::new(4);
        // connected triangle-free graphs with 3 edges: P4 and K_{1,3}
        assert_eq!(roots.by_size[3].len(), 2);
        assert!(roots.is_line_graph_of_triangle_free(&named::k3()));
        assert!(!roots.is_line_graph_of_triangle_free(&named::claw()));
        assert!(roots.is_line_graph_of_triangle_free(&named::cycle(4).unwrap()));
        assert!(!roots.is_line_graph_of_triangle_free(&named::diamond()));
        assert_eq!(combinations(4, 2).len(), 6);
    }
}
