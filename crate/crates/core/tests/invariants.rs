use clawkit::decompose::{decompose_explicit, decompose_generic, property2};
use clawkit::edge_graph::edge_graph;
use clawkit::enumerate::enumerate_graphs;
use clawkit::format::{graph6_decode, graph6_encode};
use clawkit::homogeneous::{homogeneous_triples, same_3_homogeneous};
use clawkit::incidence::{is_k_hypomorphic_up_to_comp, BinMatrix, RatMatrix};
use clawkit::iso::{are_isomorphic, is_isomorphism};
use clawkit::named;
use clawkit::oracle;
use clawkit::structure::in_forb_claw_coclaw;
use clawkit::verify::property3_graphs;
use clawkit::{ComponentShape, Graph};
use proptest::prelude::*;

fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    enumerate_graphs(n).unwrap()
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut g = Graph::new(n).unwrap();
            let mut i = 0;
            for b in 1..n {
                for a in 0..b {
                    if bits[i] {
                        g.add_edge(a, b);
                    }
                    i += 1;
                }
            }
            g
        })
    })
}

#[test]
fn complement_is_an_involution() {
    for n in 0..=5 {
        for g in all_graphs(n) {
            assert_eq!(g.complement().complement(), g);
        }
    }
}

#[test]
fn boolean_sum_group_laws() {
    for n in 0..=4 {
        let graphs: Vec<Graph> = all_graphs(n).collect();
        let zero = Graph::new(n).unwrap();
        for a in &graphs {
            assert_eq!(&a.boolean_sum(&zero).unwrap(), a);
            assert_eq!(a.boolean_sum(a).unwrap(), zero);
            for b in &graphs {
                let ab = a.boolean_sum(b).unwrap();
                assert_eq!(ab, b.boolean_sum(a).unwrap());
                for c in &graphs {
                    assert_eq!(
                        ab.boolean_sum(c).unwrap(),
                        a.boolean_sum(&b.boolean_sum(c).unwrap()).unwrap()
                    );
                }
            }
        }
    }
}

fn shape_from_degrees(g: &Graph, part: &[usize]) -> ComponentShape {
    let k = part.len();
    let mut deg: Vec<usize> = part.iter().map(|&v| g.degree(v)).collect();
    deg.sort_unstable();
    let path =
        k == 1 && deg[0] == 0 || k >= 2 && deg[..2] == [1, 1] && deg[2..].iter().all(|&d| d == 2);
    if path {
        ComponentShape::Path(k)
    } else if k >= 3 && deg.iter().all(|&d| d == 2) {
        ComponentShape::Cycle(k)
    } else {
        ComponentShape::Other
    }
}

#[test]
fn component_shapes_three_ways() {
    for n in 1..=7 {
        for g in all_graphs(n) {
            for part in g.connected_components().iter() {
                let shape = g.classify_component(part).unwrap();
                assert_eq!(shape, shape_from_degrees(&g, part), "{}", graph6_encode(&g));
                assert_eq!(shape, oracle::walk_shape(&g, part), "{}", graph6_encode(&g));
            }
        }
    }
}

#[test]
fn two_coloring_matches_brute_force() {
    for n in 0..=7 {
        for g in all_graphs(n) {
            let c = g.two_coloring();
            assert_eq!(
                c.is_some(),
                oracle::is_two_colorable(&g),
                "{}",
                graph6_encode(&g)
            );
            if let Some(c) = c {
                assert!(g.edges().all(|e| c[e.lo()] != c[e.hi()]));
            }
        }
    }
}

#[test]
fn class_is_closed_under_complement() {
    for n in 0..=7 {
        for g in all_graphs(n) {
            assert_eq!(
                in_forb_claw_coclaw(&g),
                in_forb_claw_coclaw(&g.complement())
            );
        }
    }
}

fn has_disjoint_triangle_and_independent_triple(g: &Graph) -> bool {
    let t = oracle::homogeneous_triples(g);
    let (cliques, stables): (Vec<&[usize; 3]>, Vec<&[usize; 3]>) =
        t.iter().partition(|[a, b, _]| g.has_edge(*a, *b));
    cliques
        .iter()
        .any(|c| stables.iter().any(|s| s.iter().all(|v| !c.contains(v))))
}

#[test]
fn a6_is_the_only_member_with_disjoint_k3_and_co_k3() {
    let a6 = named::a6();
    let co = a6.complement();
    let mut found = 0;
    for n in 6..=7 {
        for g in all_graphs(n).filter(in_forb_claw_coclaw) {
            let special =
                n == 6 && (are_isomorphic(&g, &a6).is_some() || are_isomorphic(&g, &co).is_some());
            assert_eq!(
                has_disjoint_triangle_and_independent_triple(&g),
                special,
                "{}",
                graph6_encode(&g)
            );
            found += special as usize;
        }
    }
    // 6!/|Aut(A6)| labelings each of A6 and its complement
    assert_eq!(found, 2 * 120);
}

#[test]
fn homogeneous_triples_complement_invariant() {
    for n in 0..=6 {
        for g in all_graphs(n) {
            let t = homogeneous_triples(&g);
            assert_eq!(t, homogeneous_triples(&g.complement()));
            assert_eq!(t.members(), oracle::homogeneous_triples(&g).as_slice());
        }
    }
}

#[test]
fn consequences_of_bipartite_edge_graphs() {
    for n in 0..=7 {
        for u in all_graphs(n) {
            if !property2(&u).unwrap() {
                continue;
            }
            let triangle_free = u.find_triangle().is_none();
            if triangle_free {
                for s in u.component_shapes() {
                    let ok = match s {
                        ComponentShape::Path(_) => true,
                        ComponentShape::Cycle(k) => k % 2 == 0,
                        ComponentShape::Other => false,
                    };
                    assert!(ok, "{}", graph6_encode(&u));
                }
                assert!(u.two_coloring().is_some());
            }
            if !u.is_connected() {
                assert!(triangle_free, "{}", graph6_encode(&u));
            }
        }
    }
}

#[test]
fn generic_decomposition_is_deterministic() {
    for u in property3_graphs(6).iter().step_by(97) {
        let a = decompose_generic(u).unwrap().unwrap();
        let b = decompose_generic(u).unwrap().unwrap();
        assert_eq!((a.g, a.gp), (b.g, b.gp));
    }
}

#[test]
fn hypomorphy_descends() {
    // pairs from decompositions plus trivial pairs
    let mut pairs = Vec::new();
    for n in [6, 7, 8] {
        for u in property3_graphs(n).iter().step_by(4001) {
            let d = decompose_explicit(u).unwrap();
            pairs.push((d.g.clone(), d.gp.clone()));
            pairs.push((d.g.clone(), d.g.clone()));
            pairs.push((d.g.complement(), d.g.clone()));
        }
    }
    for (g, h) in &pairs {
        let n = g.order();
        for k in 1..=n {
            if !is_k_hypomorphic_up_to_comp(g, h, k).unwrap() {
                continue;
            }
            for t in 1..=k.min(n - k) {
                assert!(is_k_hypomorphic_up_to_comp(g, h, t).unwrap());
            }
        }
    }
    assert!(pairs.len() > 50);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn complement_involution_random(g in arb_graph(64)) {
        prop_assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn graph6_decode_encode(g in arb_graph(64)) {
        prop_assert_eq!(graph6_decode(&graph6_encode(&g)).unwrap(), g);
    }

    #[test]
    fn graph6_encode_decode(s in "[?-~]{1,12}") {
        if let Ok(g) = graph6_decode(&s) {
            prop_assert_eq!(graph6_encode(&g), s);
        }
    }

    #[test]
    fn isomorphism_matches_brute_force(
        g in arb_graph(7),
        bits in proptest::collection::vec(any::<bool>(), 21),
        perm in Just((0..7).collect::<Vec<usize>>()).prop_shuffle(),
    ) {
        let n = g.order();
        let mut h = Graph::new(n).unwrap();
        let mut i = 0;
        for b in 1..n {
            for a in 0..b {
                if bits[i] {
                    h.add_edge(a, b);
                }
                i += 1;
            }
        }
        let found = are_isomorphic(&g, &h);
        prop_assert_eq!(found.is_some(), oracle::are_isomorphic(&g, &h));
        if let Some(map) = found {
            prop_assert!(is_isomorphism(&g, &h, &map));
        }
        let p: Vec<usize> = perm.into_iter().filter(|&v| v < n).collect();
        let r = g.relabel(&p).unwrap();
        let map = are_isomorphic(&g, &r);
        prop_assert!(map.as_ref().is_some_and(|m| is_isomorphism(&g, &r, m)));
    }

    #[test]
    fn edge_graph_is_spanning_in_line_graph(u in arb_graph(16)) {
        let s = edge_graph(&u).unwrap();
        prop_assert_eq!(s.base().order(), u.size());
        for e in s.base().edges() {
            let (a, b) = (s.labels()[e.lo()], s.labels()[e.hi()]);
            let shared = a.common_endpoint(b);
            prop_assert!(shared.is_some());
            let x = shared.unwrap();
            prop_assert!(!u.has_edge(a.other(x), b.other(x)));
        }
    }

    #[test]
    fn same_triples_is_an_equivalence(a in arb_graph(6), seed in any::<u64>()) {
        let n = a.order();
        let b = a.complement();
        let mut c = if seed % 2 == 0 { a.clone() } else { b.clone() };
        if n >= 2 && seed % 3 == 0 {
            c = Graph::from_edge_mask(n, seed % (1 << (n * (n - 1) / 2))).unwrap();
        }
        prop_assert!(same_3_homogeneous(&a, &a).unwrap());
        let ab = same_3_homogeneous(&a, &b).unwrap();
        let bc = same_3_homogeneous(&b, &c).unwrap();
        prop_assert!(ab);
        prop_assert_eq!(bc, same_3_homogeneous(&c, &b).unwrap());
        if ab && bc {
            prop_assert!(same_3_homogeneous(&a, &c).unwrap());
        }
    }

    #[test]
    fn gf2_rank_bounded_by_rational_rank(
        rows in 1usize..10,
        cols in 1usize..10,
        bits in proptest::collection::vec(any::<bool>(), 100),
    ) {
        let mut m = BinMatrix::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m.set(r, c, bits[r * 10 + c]);
            }
        }
        prop_assert!(m.rank() <= RatMatrix::from(&m).rank());
    }
}
