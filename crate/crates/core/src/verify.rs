//! Exhaustive verification suites, sharded over edge-mask ranges.
//!
//! Each suite checks a structural statement on every labeled graph (or pair
//! of graphs) of a given order, comparing fast implementations against the
//! brute-force references in [`crate::oracle`].

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::decompose::{
    decompose_explicit, decompose_generic, property2, property3, verify_decomposition,
};
use crate::edge_graph::{
    complement_edge_coloring, edge_graph, is_proper_coloring, star_equivalence_check,
};
use crate::enumerate::{enumerate_graphs, graph_count, GraphEnumerator};
use crate::format::graph6_encode;
use crate::graph::Graph;
use crate::homogeneous::{lemma3_condition_b, lemma3_condition_c, same_3_homogeneous};
use crate::incidence::is_k_hypomorphic_up_to_comp;
use crate::named;
use crate::oracle::{self, LineGraphRoots};
use crate::structure::{
    classify_theorem1, contains_claw, contains_co_claw, is_claw_diamond_free, positive_certificate,
};

/// Counterexamples kept per report.
pub const MAX_COUNTEREXAMPLES: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error("suite {suite} accepts n <= {max}, got {n}")]
    OrderTooLarge { suite: Suite, n: usize, max: usize },
    #[error("cannot start worker pool: {0}")]
    ThreadPool(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    /// Positive certificates exactly on claw-free, co-claw-free graphs.
    Theorem1,
    /// Both edge-graphs bipartite iff the structural disjunction holds.
    Theorem2_23,
    /// Equal homogeneous triples for `G` and `G ⊕ U` force both edge-graphs
    /// of `U` to be bipartite. Runs over pairs.
    Theorem2_12,
    /// Every graph with the structural disjunction decomposes, by both
    /// constructions. Runs over a generated family, not all graphs.
    Decompose,
    Star,
    Claim,
    Harary,
    /// The three equivalent forms of equal homogeneous triples. Pairs.
    Homogeneous,
    /// 3-hypomorphy up to complementation versus equal homogeneous triples.
    Hypo3,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Theorem1,
        Suite::Theorem2_23,
        Suite::Theorem2_12,
        Suite::Decompose,
        Suite::Star,
        Suite::Claim,
        Suite::Harary,
        Suite::Homogeneous,
        Suite::Hypo3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Theorem1 => "theorem1",
            Suite::Theorem2_23 => "theorem2-23",
            Suite::Theorem2_12 => "theorem2-12",
            Suite::Decompose => "decompose",
            Suite::Star => "star",
            Suite::Claim => "claim",
            Suite::Harary => "harary",
            Suite::Homogeneous => "homogeneous",
            Suite::Hypo3 => "hypo3",
        }
    }

    /// Largest accepted `n`.
    pub fn max_order(self) -> usize {
        match self {
            Suite::Theorem1 | Suite::Theorem2_23 | Suite::Star | Suite::Claim => 8,
            Suite::Theorem2_12 | Suite::Homogeneous | Suite::Hypo3 => 5,
            Suite::Decompose => 9,
            Suite::Harary => 6,
        }
    }

    fn unit(self) -> &'static str {
        match self {
            Suite::Theorem2_12 | Suite::Homogeneous | Suite::Hypo3 => "pairs",
            _ => "graphs",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| VerifyError::UnknownSuite(s.to_string()))
    }
}

#[derive(Debug, Clone, Default)]
struct Tally {
    checked: u64,
    mismatches: u64,
    examples: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, example: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.mismatches += 1;
            if self.examples.len() < MAX_COUNTEREXAMPLES {
                self.examples.push(example());
            }
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.checked += other.checked;
        self.mismatches += other.mismatches;
        self.examples.extend(other.examples);
        self.examples.truncate(MAX_COUNTEREXAMPLES);
        self
    }
}

/// Outcome of one suite run.
#[derive(Debug, Clone)]
pub struct Report {
    pub suite: Suite,
    pub n: usize,
    pub checked: u64,
    pub mismatches: u64,
    /// graph6 strings (space-separated `U G` for pair suites), at most
    /// [`MAX_COUNTEREXAMPLES`].
    pub counterexamples: Vec<String>,
    pub elapsed: Duration,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.mismatches == 0
    }

    /// `"32768 graphs, 0 mismatches"`.
    pub fn summary(&self) -> String {
        format!(
            "{} {}, {} mismatches",
            self.checked,
            self.suite.unit(),
            self.mismatches
        )
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.summary())?;
        for c in &self.counterexamples {
            writeln!(f, "counterexample: {c}")?;
        }
        write!(f, "wall time: {:.3}s", self.elapsed.as_secs_f64())
    }
}

/// Runs `suite` on all graphs of order `n` with `jobs` worker threads
/// (0 picks the available parallelism).
pub fn run_suite(suite: Suite, n: usize, jobs: usize) -> Result<Report, VerifyError> {
    if n > suite.max_order() {
        return Err(VerifyError::OrderTooLarge {
            suite,
            n,
            max: suite.max_order(),
        });
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| VerifyError::ThreadPool(e.to_string()))?;
    let start = Instant::now();
    let tally = pool.install(|| match suite {
        Suite::Theorem1 => per_graph(n, check_structure),
        Suite::Theorem2_23 => per_graph(n, |g, t| {
            let p2 = property2(g).expect("small order");
            t.check(p2 == property3(g).is_some(), || graph6_encode(g));
        }),
        Suite::Theorem2_12 => per_pair(n, |u, pairs, t| {
            // the implication only has content when property2 fails
            if property2(u).expect("small order") {
                t.checked += pairs.masks().end - pairs.masks().start;
                return;
            }
            for g in pairs {
                let gp = g.boolean_sum(u).expect("same order");
                let same = same_3_homogeneous(&g, &gp).expect("same order");
                t.check(!same, || pair_text(u, &g));
            }
        }),
        Suite::Decompose => check_constructive(n),
        Suite::Star => per_graph(n, |u, t| {
            let s = edge_graph(u).expect("small order");
            let ok = star_equivalence_check(u).expect("small order")
                && oracle::has_claw(u) == oracle::has_triangle(s.base());
            t.check(ok, || graph6_encode(u));
        }),
        Suite::Claim => per_graph(n, check_claim),
        Suite::Harary => {
            let roots = LineGraphRoots::new(n);
            per_graph(n, |g, t| {
                let ok = is_claw_diamond_free(g) == roots.is_line_graph_of_triangle_free(g)
                    && is_claw_diamond_free(g) == (!oracle::has_claw(g) && !oracle::has_diamond(g));
                t.check(ok, || graph6_encode(g));
            })
        }
        Suite::Homogeneous => per_pair(n, |u, pairs, t| {
            for g in pairs {
                let gp = g.boolean_sum(u).expect("same order");
                let a = same_3_homogeneous(&g, &gp).expect("same order");
                let naive = oracle::homogeneous_triples(&g) == oracle::homogeneous_triples(&gp);
                let b = lemma3_condition_b(&g, u).expect("same order");
                let c = lemma3_condition_c(&g, u).expect("same order");
                t.check(a == naive && a == b && a == c, || pair_text(u, &g));
            }
        }),
        Suite::Hypo3 => per_pair(n, |u, pairs, t| {
            for g in pairs {
                let gp = g.boolean_sum(u).expect("same order");
                let same = same_3_homogeneous(&g, &gp).expect("same order");
                let hypo = n < 3 || is_k_hypomorphic_up_to_comp(&g, &gp, 3).expect("small order");
                t.check(same == hypo, || pair_text(u, &g));
            }
        }),
    });
    Ok(Report {
        suite,
        n,
        checked: tally.checked,
        mismatches: tally.mismatches,
        counterexamples: tally.examples,
        elapsed: start.elapsed(),
    })
}

fn pair_text(u: &Graph, g: &Graph) -> String {
    format!("{} {}", graph6_encode(u), graph6_encode(g))
}

fn shards(n: usize) -> Vec<GraphEnumerator> {
    let all = enumerate_graphs(n).expect("order checked by caller");
    all.split(rayon::current_num_threads() * 16)
}

fn per_graph<F>(n: usize, check: F) -> Tally
where
    F: Fn(&Graph, &mut Tally) + Sync,
{
    shards(n)
        .into_par_iter()
        .map(|shard| {
            let mut t = Tally::default();
            for g in shard {
                check(&g, &mut t);
            }
            t
        })
        .reduce(Tally::default, Tally::merge)
}

/// Shards over `U`; the callback receives every `G` of the same order.
fn per_pair<F>(n: usize, check: F) -> Tally
where
    F: Fn(&Graph, GraphEnumerator, &mut Tally) + Sync,
{
    shards(n)
        .into_par_iter()
        .map(|shard| {
            let mut t = Tally::default();
            for u in shard {
                check(&u, enumerate_graphs(n).expect("order checked"), &mut t);
            }
            t
        })
        .reduce(Tally::default, Tally::merge)
}

fn check_structure(g: &Graph, t: &mut Tally) {
    let in_class = !oracle::has_claw(g) && !oracle::has_co_claw(g);
    let ok = match positive_certificate(g) {
        Some(cert) => {
            in_class && cert.verify(g) && {
                let c = classify_theorem1(g);
                c.is_positive() && c.verify(g)
            }
        }
        None => {
            !in_class && (contains_claw(g).is_some() || contains_co_claw(g).is_some()) && {
                let c = classify_theorem1(g);
                !c.is_positive() && c.verify(g)
            }
        }
    };
    t.check(ok, || graph6_encode(g));
}

fn check_claim(u: &Graph, t: &mut Tally) {
    let coloring = u.two_coloring();
    let mut ok = coloring.is_some() == oracle::is_two_colorable(u);
    if let Some(c) = coloring {
        let s = edge_graph(&u.complement()).expect("small order");
        let cp = complement_edge_coloring(u, &c);
        ok &= is_proper_coloring(s.base(), &cp);
    }
    t.check(ok, || graph6_encode(u));
}

fn check_constructive(n: usize) -> Tally {
    let family = property3_graphs(n);
    family
        .par_chunks(4096)
        .map(|chunk| {
            let mut t = Tally::default();
            for u in chunk {
                let explicit = decompose_explicit(u).is_some_and(|d| verify_decomposition(&d));
                let generic = decompose_generic(u)
                    .expect("small order")
                    .is_some_and(|d| verify_decomposition(&d));
                t.check(explicit && generic, || graph6_encode(u));
            }
            t
        })
        .reduce(Tally::default, Tally::merge)
}

/// Largest order for [`property3_graphs`].
pub const MAX_PROPERTY3_ORDER: usize = 9;

/// Every labeled graph on `n` vertices satisfying the structural disjunction
/// (components paths and even cycles, the same for the complement, or
/// induced in `P_9`), generated directly rather than filtered. Sorted by
/// edge mask.
///
/// # Panics
///
/// If `n > MAX_PROPERTY3_ORDER`.
pub fn property3_graphs(n: usize) -> Vec<Graph> {
    assert!(
        n <= MAX_PROPERTY3_ORDER,
        "property3 family is generated for n <= {MAX_PROPERTY3_ORDER}"
    );
    let mut masks = BTreeSet::new();
    let full = graph_count(n) - 1;
    let mut forests = Vec::new();
    grow_forests(n, (1u32 << n) - 1, 0, &mut forests);
    for m in forests {
        masks.insert(m);
        masks.insert(full ^ m);
    }
    let p9 = named::p9();
    let mut image = Vec::with_capacity(n);
    embed_p9(&p9, n, 0, &mut image, &mut masks);
    masks
        .into_iter()
        .map(|m| Graph::from_edge_mask(n, m).expect("n is small"))
        .collect()
}

fn pair_bit(a: usize, b: usize) -> u64 {
    let (a, b) = if a < b { (a, b) } else { (b, a) };
    1 << (b * (b - 1) / 2 + a)
}

/// Splits `remaining` into components: the lowest remaining vertex plus any
/// subset of the others, laid out as every labeled path or even cycle.
fn grow_forests(n: usize, remaining: u32, edges: u64, out: &mut Vec<u64>) {
    if remaining == 0 {
        out.push(edges);
        return;
    }
    let v = remaining.trailing_zeros() as usize;
    let rest = remaining & !(1 << v);
    let mut t = rest;
    loop {
        let mut verts = vec![v];
        verts.extend((0..n).filter(|&i| t >> i & 1 == 1));
        for layout in component_layouts(&verts) {
            grow_forests(n, rest & !t, edges | layout, out);
        }
        if t == 0 {
            break;
        }
        t = (t - 1) & rest;
    }
}

/// Edge masks of all labeled paths, and even cycles of length >= 4, through
/// exactly `verts` (ascending).
fn component_layouts(verts: &[usize]) -> Vec<u64> {
    let k = verts.len();
    if k == 1 {
        return vec![0];
    }
    let mut out = Vec::new();
    let mut perm = verts.to_vec();
    permute(&mut perm, 0, &mut |p| {
        let path: u64 = p.windows(2).map(|w| pair_bit(w[0], w[1])).sum();
        if p[0] < p[k - 1] {
            out.push(path);
        }
        if k >= 4 && k.is_multiple_of(2) && p[0] == verts[0] && p[1] < p[k - 1] {
            out.push(path | pair_bit(p[0], p[k - 1]));
        }
    });
    out
}

fn permute(p: &mut [usize], i: usize, visit: &mut impl FnMut(&[usize])) {
    if i == p.len() {
        visit(p);
        return;
    }
    for j in i..p.len() {
        p.swap(i, j);
        permute(p, i + 1, visit);
        p.swap(i, j);
    }
}

/// Adds the pullback of `P_9` along every injection `0..n -> 0..9`.
fn embed_p9(p9: &Graph, n: usize, used: u32, image: &mut Vec<usize>, out: &mut BTreeSet<u64>) {
    if image.len() == n {
        let mut m = 0;
        for b in 1..n {
            for a in 0..b {
                if p9.has_edge(image[a], image[b]) {
                    m |= pair_bit(a, b);
                }
            }
        }
        out.insert(m);
        return;
    }
    for x in 0..9 {
        if used >> x & 1 == 0 {
            image.push(x);
            embed_p9(p9, n, used | 1 << x, image, out);
            image.pop();
        }
    }
}

/// Checks the claw/triangle correspondence on `samples` random graphs with
/// `1 <= n <= max_n` vertices and a random edge density, from a fixed seed.
/// Claws are found by the brute-force reference, triangles by the fast path.
pub fn random_star(
    samples: u64,
    max_n: usize,
    seed: u64,
    jobs: usize,
) -> Result<Report, VerifyError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| VerifyError::ThreadPool(e.to_string()))?;
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let graphs: Vec<Graph> = (0..samples)
        .map(|_| {
            let n = rng.gen_range(1..=max_n);
            let p: f64 = rng.gen();
            let mut g = Graph::new(n).expect("small order");
            for b in 1..n {
                for a in 0..b {
                    if rng.gen_bool(p) {
                        g.add_edge(a, b);
                    }
                }
            }
            g
        })
        .collect();
    let tally = pool.install(|| {
        graphs
            .par_chunks(1024)
            .map(|chunk| {
                let mut t = Tally::default();
                for u in chunk {
                    let s = edge_graph(u).expect("small order");
                    let ok = star_equivalence_check(u).expect("small order")
                        && oracle::has_claw(u) == s.base().find_triangle().is_some();
                    t.check(ok, || graph6_encode(u));
                }
                t
            })
            .reduce(Tally::default, Tally::merge)
    });
    Ok(Report {
        suite: Suite::Star,
        n: max_n,
        checked: tally.checked,
        mismatches: tally.mismatches,
        counterexamples: tally.examples,
        elapsed: start.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("theorem3".parse::<Suite>().is_err());
    }

    #[test]
    fn caps_are_enforced() {
        assert!(matches!(
            run_suite(Suite::Homogeneous, 6, 1),
            Err(VerifyError::OrderTooLarge { max: 5, .. })
        ));
    }

    #[test]
    fn small_runs() {
        let r = run_suite(Suite::Theorem1, 4, 2).unwrap();
        assert_eq!(r.summary(), "64 graphs, 0 mismatches");
        let r = run_suite(Suite::Hypo3, 3, 2).unwrap();
        assert_eq!(r.summary(), "64 pairs, 0 mismatches");
    }

    #[test]
    fn layouts_count_paths_and_cycles() {
        // 4 labeled vertices: 12 paths and 3 four-cycles
        assert_eq!(component_layouts(&[0, 1, 2, 3]).len(), 15);
        assert_eq!(component_layouts(&[2, 5, 7]).len(), 3);
        assert_eq!(component_layouts(&[4]), vec![0]);
    }

    #[test]
    fn generated_family_matches_filter() {
        for n in 0..=6 {
            let generated: Vec<u64> = property3_graphs(n)
                .iter()
                .map(|g| g.edge_mask().unwrap())
                .collect();
            let filtered: Vec<u64> = enumerate_graphs(n)
                .unwrap()
                .filter(|g| property3(g).is_some())
                .map(|g| g.edge_mask().unwrap())
                .collect();
            assert_eq!(generated, filtered, "n = {n}");
        }
    }

    #[test]
    fn random_star_is_seeded() {
        let a = random_star(200, 10, 7, 2).unwrap();
        let b = random_star(200, 10, 7, 2).unwrap();
        assert_eq!(a.summary(), "200 graphs, 0 mismatches");
        assert_eq!(a.checked, b.checked);
    }
}
