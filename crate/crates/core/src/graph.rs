//! Simple undirected graphs on the vertex set `0..n` with bit-packed adjacency rows.

use std::collections::VecDeque;
use std::fmt;

use crate::bits;
use crate::error::GraphError;

/// Largest supported vertex count. Edge-graphs of 64-vertex graphs have up to
/// 2016 vertices and must fit.
pub const MAX_VERTICES: usize = 2048;

/// An unordered pair of distinct vertices, stored with `lo < hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexPair {
    lo: usize,
    hi: usize,
}

impl VertexPair {
    /// Returns `None` when `a == b`.
    pub fn new(a: usize, b: usize) -> Option<Self> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Some(Self { lo: a, hi: b }),
            std::cmp::Ordering::Greater => Some(Self { lo: b, hi: a }),
            std::cmp::Ordering::Equal => None,
        }
    }

    pub fn lo(self) -> usize {
        self.lo
    }

    pub fn hi(self) -> usize {
        self.hi
    }

    /// The endpoint shared with `other`, if they share exactly one.
    pub fn common_endpoint(self, other: VertexPair) -> Option<usize> {
        if self == other {
            return None;
        }
        if self.lo == other.lo || self.lo == other.hi {
            Some(self.lo)
        } else if self.hi == other.lo || self.hi == other.hi {
            Some(self.hi)
        } else {
            None
        }
    }

    /// The endpoint that is not `x`.
    pub fn other(self, x: usize) -> usize {
        if x == self.lo {
            self.hi
        } else {
            self.lo
        }
    }
}

impl fmt::Display for VertexPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.lo, self.hi)
    }
}

/// Shape of a connected component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ComponentShape {
    /// Induced path on the given number of vertices; an isolated vertex is `Path(1)`.
    Path(usize),
    /// Induced cycle on the given number of vertices (at least 3).
    Cycle(usize),
    Other,
}

impl fmt::Display for ComponentShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComponentShape::Path(k) => write!(f, "Path({k})"),
            ComponentShape::Cycle(k) => write!(f, "Cycle({k})"),
            ComponentShape::Other => f.write_str("Other"),
        }
    }
}

/// Partition of the vertex set into connected components. Each part is sorted
/// and parts are ordered by their smallest vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentPartition(Vec<Vec<usize>>);

impl ComponentPartition {
    pub fn parts(&self) -> &[Vec<usize>] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Vec<usize>> {
        self.0.iter()
    }

    /// Component index of every vertex.
    pub fn membership(&self, n: usize) -> Vec<usize> {
        let mut of = vec![0; n];
        for (c, part) in self.0.iter().enumerate() {
            for &v in part {
                of[v] = c;
            }
        }
        of
    }
}

impl IntoIterator for ComponentPartition {
    type Item = Vec<usize>;
    type IntoIter = std::vec::IntoIter<Vec<usize>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

/// A simple undirected loopless graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    stride: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n });
        }
        let stride = bits::words_for(n);
        Ok(Self {
            n,
            stride,
            rows: vec![0; stride * n],
        })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::new(n)?;
        for (u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.set(u, v, true);
        }
        Ok(g)
    }

    /// Builds the graph whose edge set is given by the bits of `mask`, bit `i`
    /// standing for the `i`-th pair in colexicographic order
    /// `(0,1), (0,2), (1,2), (0,3), ...`.
    pub fn from_edge_mask(n: usize, mask: u64) -> Result<Self, GraphError> {
        let pairs = n * n.saturating_sub(1) / 2;
        if pairs > 64 {
            return Err(GraphError::Oversize {
                what: "edge masks",
                n,
                limit: 11,
            });
        }
        let mut g = Self::new(n)?;
        let mut bit = 0;
        for j in 1..n {
            for i in 0..j {
                if mask >> bit & 1 == 1 {
                    g.set(i, j, true);
                }
                bit += 1;
            }
        }
        Ok(g)
    }

    /// Inverse of [`Graph::from_edge_mask`]; `None` when `n > 11`.
    pub fn edge_mask(&self) -> Option<u64> {
        if self.n * self.n.saturating_sub(1) / 2 > 64 {
            return None;
        }
        let mut mask = 0u64;
        let mut bit = 0;
        for j in 1..self.n {
            for i in 0..j {
                if self.has_edge(i, j) {
                    mask |= 1 << bit;
                }
                bit += 1;
            }
        }
        Some(mask)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.rows
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && u < self.n && v < self.n && bits::get(self.row(u), v)
    }

    /// Adds the edge `uv`. Panics on loops or out-of-range endpoints.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n && u != v, "bad edge {u}-{v}");
        self.set(u, v, true);
    }

    /// Removes the edge `uv`. Panics on out-of-range endpoints.
    pub fn remove_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "bad edge {u}-{v}");
        if u != v {
            self.set(u, v, false);
        }
    }

    #[inline]
    fn set(&mut self, u: usize, v: usize, on: bool) {
        let (s, n) = (self.stride, self.n);
        debug_assert!(u < n && v < n && u != v);
        bits::assign(&mut self.rows[u * s..(u + 1) * s], v, on);
        bits::assign(&mut self.rows[v * s..(v + 1) * s], u, on);
    }

    /// Adjacency row of `v` as a bitset over `0..n`.
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.stride..(v + 1) * self.stride]
    }

    pub fn degree(&self, v: usize) -> usize {
        bits::count(self.row(v))
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits::ones(self.row(v))
    }

    /// Edges in lexicographic order of their endpoint pairs.
    pub fn edges(&self) -> impl Iterator<Item = VertexPair> + '_ {
        (0..self.n).flat_map(move |u| {
            bits::ones(self.row(u))
                .filter(move |&v| v > u)
                .map(move |v| VertexPair { lo: u, hi: v })
        })
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    fn check_same_order(&self, other: &Graph) -> Result<(), GraphError> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(GraphError::OrderMismatch {
                left: self.n,
                right: other.n,
            })
        }
    }

    pub fn complement(&self) -> Graph {
        let mut g = self.clone();
        for v in 0..self.n {
            let s = self.stride;
            let row = &mut g.rows[v * s..(v + 1) * s];
            for w in row.iter_mut() {
                *w = !*w;
            }
            bits::assign(row, v, false);
            bits::mask_tail(row, self.n);
        }
        g
    }

    /// Graph whose edge set is the symmetric difference of the two edge sets.
    pub fn boolean_sum(&self, other: &Graph) -> Result<Graph, GraphError> {
        self.check_same_order(other)?;
        let mut g = self.clone();
        for (a, b) in g.rows.iter_mut().zip(&other.rows) {
            *a ^= *b;
        }
        Ok(g)
    }

    /// Subgraph induced on `subset`. The subset is sorted first, so vertex `i`
    /// of the result is the `i`-th smallest element; the returned map sends new
    /// indices back to the original vertices.
    pub fn induced(&self, subset: &[usize]) -> Result<(Graph, Vec<usize>), GraphError> {
        let mut map = subset.to_vec();
        map.sort_unstable();
        for w in map.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::DuplicateVertex(w[0]));
            }
        }
        if let Some(&v) = map.last() {
            self.check_vertex(v)?;
        }
        Ok((self.induced_unchecked(&map), map))
    }

    /// Induced subgraph with vertex `i` of the result being `vertices[i]`.
    /// Vertices must be distinct and in range.
    pub(crate) fn induced_unchecked(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::new(vertices.len()).expect("subset of a valid graph");
        for (i, &a) in vertices.iter().enumerate() {
            for (j, &b) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) {
                    g.set(i, j, true);
                }
            }
        }
        g
    }

    /// Relabels vertices: vertex `v` of `self` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        if perm.len() != self.n {
            return Err(GraphError::OrderMismatch {
                left: self.n,
                right: perm.len(),
            });
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            self.check_vertex(p)?;
            if std::mem::replace(&mut seen[p], true) {
                return Err(GraphError::DuplicateVertex(p));
            }
        }
        let mut g = Graph::new(self.n)?;
        for e in self.edges() {
            g.set(perm[e.lo], perm[e.hi], true);
        }
        Ok(g)
    }

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let k = self.n;
        let mut g = Graph::new(k + other.n)?;
        for e in self.edges() {
            g.set(e.lo, e.hi, true);
        }
        for e in other.edges() {
            g.set(e.lo + k, e.hi + k, true);
        }
        Ok(g)
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    pub fn connected_components(&self) -> ComponentPartition {
        let mut seen = vec![false; self.n];
        let mut parts = Vec::new();
        let mut queue = VecDeque::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            queue.push_back(start);
            let mut part = Vec::new();
            while let Some(v) = queue.pop_front() {
                part.push(v);
                for w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            part.sort_unstable();
            parts.push(part);
        }
        ComponentPartition(parts)
    }

    /// Classifies the component `part` as a path, a cycle or something else.
    pub fn classify_component(&self, part: &[usize]) -> Result<ComponentShape, GraphError> {
        if part.is_empty() {
            return Err(GraphError::NotAComponent);
        }
        let mut inside = bits::zeros(self.n);
        for &v in part {
            self.check_vertex(v)?;
            if bits::get(&inside, v) {
                return Err(GraphError::DuplicateVertex(v));
            }
            bits::assign(&mut inside, v, true);
        }
        // closed under adjacency
        for &v in part {
            if !bits::is_subset(self.row(v), &inside) {
                return Err(GraphError::NotAComponent);
            }
        }
        // connected
        let mut reached = bits::zeros(self.n);
        let mut stack = vec![part[0]];
        bits::assign(&mut reached, part[0], true);
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for w in self.neighbors(v) {
                if !bits::get(&reached, w) {
                    bits::assign(&mut reached, w, true);
                    count += 1;
                    stack.push(w);
                }
            }
        }
        if count != part.len() {
            return Err(GraphError::NotAComponent);
        }
        Ok(self.component_shape(part))
    }

    /// Shape of a part already known to be a connected component.
    pub(crate) fn component_shape(&self, part: &[usize]) -> ComponentShape {
        let k = part.len();
        let mut degree_sum = 0;
        let mut max_degree = 0;
        let mut all_two = true;
        for &v in part {
            let d = self.degree(v);
            degree_sum += d;
            max_degree = max_degree.max(d);
            all_two &= d == 2;
        }
        let edges = degree_sum / 2;
        if max_degree <= 2 && edges + 1 == k {
            ComponentShape::Path(k)
        } else if k >= 3 && all_two {
            ComponentShape::Cycle(k)
        } else {
            ComponentShape::Other
        }
    }

    /// Shapes of all components, in component order.
    pub fn component_shapes(&self) -> Vec<ComponentShape> {
        self.connected_components()
            .iter()
            .map(|part| self.component_shape(part))
            .collect()
    }

    /// A proper 2-coloring, if one exists. Each component's smallest vertex
    /// receives color 0.
    pub fn two_coloring(&self) -> Option<Vec<u8>> {
        const UNSET: u8 = u8::MAX;
        let mut color = vec![UNSET; self.n];
        let mut queue = VecDeque::new();
        for start in 0..self.n {
            if color[start] != UNSET {
                continue;
            }
            color[start] = 0;
            queue.push_back(start);
            while let Some(v) = queue.pop_front() {
                for w in self.neighbors(v) {
                    if color[w] == UNSET {
                        color[w] = color[v] ^ 1;
                        queue.push_back(w);
                    } else if color[w] == color[v] {
                        return None;
                    }
                }
            }
        }
        Some(color)
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    /// Lexicographically first triangle, if any.
    pub fn find_triangle(&self) -> Option<[usize; 3]> {
        let mut common = bits::zeros(self.n);
        for a in 0..self.n {
            for b in self.neighbors(a).filter(|&b| b > a) {
                bits::and_into(&mut common, self.row(a), self.row(b));
                if let Some(c) = bits::first_one_from(&common, b + 1) {
                    return Some([a, b, c]);
                }
            }
        }
        None
    }

    /// Lexicographically first independent triple, if any.
    pub fn find_independent_triple(&self) -> Option<[usize; 3]> {
        self.complement().find_triangle()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field(
                "edges",
                &self.edges().map(|e| (e.lo, e.hi)).collect::<Vec<_>>(),
            )
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, edges.iter().copied()).unwrap()
    }

    #[test]
    fn rejects_loops_and_range() {
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert!(matches!(
            Graph::from_edges(3, [(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        ));
        assert!(Graph::new(MAX_VERTICES).is_ok());
        assert!(Graph::new(MAX_VERTICES + 1).is_err());
    }

    #[test]
    fn complement_of_complete_is_empty() {
        let k4 = named::complete(4).unwrap();
        assert_eq!(k4.complement(), Graph::new(4).unwrap());
        assert_eq!(k4.size(), 6);
    }

    #[test]
    fn complement_at_word_boundaries() {
        for n in [63, 64, 65, 128, 130] {
            let g = Graph::new(n).unwrap().complement();
            assert_eq!(g.size(), n * (n - 1) / 2);
            assert!((0..n).all(|v| !g.has_edge(v, v) && g.degree(v) == n - 1));
        }
    }

    #[test]
    fn boolean_sum_basics() {
        let g = named::p9();
        assert_eq!(g.boolean_sum(&g).unwrap(), Graph::new(9).unwrap());
        assert_eq!(
            g.boolean_sum(&g.complement()).unwrap(),
            named::complete(9).unwrap()
        );
        assert!(matches!(
            g.boolean_sum(&named::k3()),
            Err(GraphError::OrderMismatch { left: 9, right: 3 })
        ));
    }

    #[test]
    fn induced_subgraphs() {
        let claw = named::claw();
        let (leaves, map) = claw.induced(&[3, 1, 2]).unwrap();
        assert_eq!(leaves, Graph::new(3).unwrap());
        assert_eq!(map, vec![1, 2, 3]);
        let (all, _) = claw.induced(&[0, 1, 2, 3]).unwrap();
        assert_eq!(all, claw);
        // a row of the rook graph is a triangle
        let (row, _) = named::p9().induced(&[0, 1, 2]).unwrap();
        assert_eq!(row, named::k3());
        assert!(claw.induced(&[0, 4]).is_err());
        assert_eq!(claw.induced(&[1, 1]), Err(GraphError::DuplicateVertex(1)));
    }

    #[test]
    fn components() {
        let parts = Graph::new(3).unwrap().connected_components();
        assert_eq!(parts.parts(), &[vec![0], vec![1], vec![2]]);
        let g = named::cycle(4)
            .unwrap()
            .disjoint_union(&named::path(3).unwrap())
            .unwrap();
        let sizes: Vec<usize> = g.connected_components().iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![4, 3]);
        assert_eq!(named::a6().connected_components().len(), 1);
    }

    #[test]
    fn component_shapes() {
        let g = graph(1, &[]);
        assert_eq!(g.classify_component(&[0]), Ok(ComponentShape::Path(1)));
        let c5 = named::cycle(5).unwrap();
        assert_eq!(
            c5.classify_component(&[0, 1, 2, 3, 4]),
            Ok(ComponentShape::Cycle(5))
        );
        assert_eq!(
            named::claw().classify_component(&[0, 1, 2, 3]),
            Ok(ComponentShape::Other)
        );
        assert_eq!(
            c5.classify_component(&[0, 1]),
            Err(GraphError::NotAComponent)
        );
        let two = graph(4, &[(0, 1), (2, 3)]);
        assert_eq!(
            two.classify_component(&[0, 1, 2, 3]),
            Err(GraphError::NotAComponent)
        );
    }

    #[test]
    fn colorings() {
        assert!(named::cycle(4).unwrap().two_coloring().is_some());
        assert!(named::cycle(5).unwrap().two_coloring().is_none());
        assert!(named::k3().two_coloring().is_none());
        let c = graph(4, &[(1, 2), (2, 3)]).two_coloring().unwrap();
        assert_eq!(c, vec![0, 0, 1, 0]);
    }

    #[test]
    fn edge_mask_round_trip() {
        let g = graph(4, &[(0, 1), (2, 3)]);
        // bits: (0,1)=0, (0,2)=1, (1,2)=2, (0,3)=3, (1,3)=4, (2,3)=5
        assert_eq!(g.edge_mask(), Some(0b100001));
        assert_eq!(Graph::from_edge_mask(4, 0b100001).unwrap(), g);
    }

    #[test]
    fn triangles() {
        assert_eq!(named::k3().find_triangle(), Some([0, 1, 2]));
        assert_eq!(named::cycle(4).unwrap().find_triangle(), None);
        assert_eq!(named::cycle(4).unwrap().find_independent_triple(), None);
    }
}
