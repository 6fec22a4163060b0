//! Backtracking search for induced embeddings and isomorphisms.
//!
//! Candidates for each pattern vertex are kept as bitsets over the target and
//! narrowed with the adjacency rows of already-placed vertices, so each step
//! enforces both edges and non-edges at word speed.

use crate::bits;
use crate::graph::Graph;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    Embed,
    Iso,
}

/// Finds an injection `f` with `pattern(x, y) <=> target(f(x), f(y))` for all
/// pairs, returned as `f[x]`.
pub fn find_induced_embedding(pattern: &Graph, target: &Graph) -> Option<Vec<usize>> {
    if pattern.order() > target.order() {
        return None;
    }
    Matcher::new(pattern, target, Mode::Embed).run()
}

/// Finds an isomorphism `f: V(g) -> V(h)`, returned as `f[x]`.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if g.order() != h.order() || g.size() != h.size() {
        return None;
    }
    let mut dg = g.degrees();
    let mut dh = h.degrees();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return None;
    }
    Matcher::new(g, h, Mode::Iso).run()
}

/// Checks that `map` is an induced embedding of `pattern` into `target`.
pub fn is_induced_embedding(pattern: &Graph, target: &Graph, map: &[usize]) -> bool {
    if map.len() != pattern.order() {
        return false;
    }
    let mut used = vec![false; target.order()];
    for &t in map {
        if t >= target.order() || std::mem::replace(&mut used[t], true) {
            return false;
        }
    }
    (0..map.len()).all(|x| {
        (x + 1..map.len()).all(|y| pattern.has_edge(x, y) == target.has_edge(map[x], map[y]))
    })
}

/// Checks that `map` is an isomorphism from `g` onto `h`.
pub fn is_isomorphism(g: &Graph, h: &Graph, map: &[usize]) -> bool {
    g.order() == h.order() && is_induced_embedding(g, h, map)
}

/// Degree plus sorted neighbor degrees.
fn signature(g: &Graph, v: usize) -> (usize, Vec<usize>) {
    let mut nd: Vec<usize> = g.neighbors(v).map(|w| g.degree(w)).collect();
    nd.sort_unstable();
    (nd.len(), nd)
}

struct Matcher<'a> {
    pattern: &'a Graph,
    target: &'a Graph,
    order: Vec<usize>,
    allowed: Vec<Vec<u64>>,
    map: Vec<usize>,
    used: Vec<u64>,
}

impl<'a> Matcher<'a> {
    fn new(pattern: &'a Graph, target: &'a Graph, mode: Mode) -> Self {
        let (np, nt) = (pattern.order(), target.order());
        let allowed = match mode {
            Mode::Iso => {
                let tsig: Vec<_> = (0..nt).map(|t| signature(target, t)).collect();
                (0..np)
                    .map(|p| {
                        let sig = signature(pattern, p);
                        let mut set = bits::zeros(nt);
                        for (t, s) in tsig.iter().enumerate() {
                            if *s == sig {
                                bits::assign(&mut set, t, true);
                            }
                        }
                        set
                    })
                    .collect()
            }
            Mode::Embed => {
                let tdeg = target.degrees();
                (0..np)
                    .map(|p| {
                        let d = pattern.degree(p);
                        let co = np - 1 - d;
                        let mut set = bits::zeros(nt);
                        for (t, &td) in tdeg.iter().enumerate() {
                            if td >= d && nt - 1 - td >= co {
                                bits::assign(&mut set, t, true);
                            }
                        }
                        set
                    })
                    .collect()
            }
        };
        Self {
            pattern,
            target,
            order: search_order(pattern),
            allowed,
            map: vec![usize::MAX; np],
            used: bits::zeros(nt),
        }
    }

    fn run(mut self) -> Option<Vec<usize>> {
        if self.extend(0) {
            Some(self.map)
        } else {
            None
        }
    }

    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let p = self.order[depth];
        let mut cand = self.allowed[p].clone();
        for (c, u) in cand.iter_mut().zip(&self.used) {
            *c &= !u;
        }
        for &q in &self.order[..depth] {
            let row = self.target.row(self.map[q]);
            if self.pattern.has_edge(p, q) {
                for (c, r) in cand.iter_mut().zip(row) {
                    *c &= r;
                }
            } else {
                for (c, r) in cand.iter_mut().zip(row) {
                    *c &= !r;
                }
            }
            bits::assign(&mut cand, self.map[q], false);
        }
        for t in bits::ones(&cand).collect::<Vec<_>>() {
            self.map[p] = t;
            bits::assign(&mut self.used, t, true);
            if self.extend(depth + 1) {
                return true;
            }
            bits::assign(&mut self.used, t, false);
        }
        self.map[p] = usize::MAX;
        false
    }
}

/// Pattern vertices ordered so that each one has as many already-placed
/// neighbors as possible, ties broken by degree then index.
fn search_order(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by(|&a, &b| {
                (links[a], g.degree(a))
                    .cmp(&(links[b], g.degree(b)))
                    .then(b.cmp(&a))
            })
            .expect("unplaced vertex remains");
        placed[next] = true;
        for w in g.neighbors(next) {
            links[w] += 1;
        }
        order.push(next);
    }
    order
}
