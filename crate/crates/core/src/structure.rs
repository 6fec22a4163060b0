//! Forbidden induced subgraph detectors and the certifying classifier for
//! graphs with no claw and no co-claw.
//!
//! Members of the class are recognized by exhibiting one of four shapes: an
//! isomorphism onto `A_6` or its complement, an induced embedding into `P_9`,
//! a component list made of paths and cycles of length at least 4, or the
//! same component list for the complement.

use std::fmt;
use std::str::FromStr;

use crate::bits;
use crate::graph::{ComponentShape, Graph};
use crate::iso::{are_isomorphic, find_induced_embedding, is_induced_embedding, is_isomorphism};
use crate::named;

/// Which forbidden graph a negative certificate exhibits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Forbidden {
    Claw,
    CoClaw,
}

impl Forbidden {
    fn name(self) -> &'static str {
        match self {
            Forbidden::Claw => "claw",
            Forbidden::CoClaw => "co-claw",
        }
    }
}

/// Lexicographically first claw, as `[center, leaf, leaf, leaf]` with the
/// leaves ascending.
pub fn contains_claw(g: &Graph) -> Option<[usize; 4]> {
    let n = g.order();
    let mut cand = bits::zeros(n);
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let (ab, ac, bc) = (g.has_edge(a, b), g.has_edge(a, c), g.has_edge(b, c));
                let found = match (ab, ac, bc) {
                    (false, false, false) => {
                        for (i, w) in cand.iter_mut().enumerate() {
                            *w = g.row(a)[i] & g.row(b)[i] & g.row(c)[i];
                        }
                        bits::first_one_from(&cand, c + 1).map(|d| [d, a, b, c])
                    }
                    (true, true, false) => leaf_extension(g, &mut cand, a, b, c),
                    (true, false, true) => leaf_extension(g, &mut cand, b, a, c),
                    (false, true, true) => leaf_extension(g, &mut cand, c, a, b),
                    _ => None,
                };
                if found.is_some() {
                    return found;
                }
            }
        }
    }
    None
}

/// Claw with center `m` and leaves `p < q` completed by a leaf `d > max`.
fn leaf_extension(g: &Graph, cand: &mut [u64], m: usize, p: usize, q: usize) -> Option<[usize; 4]> {
    for (i, w) in cand.iter_mut().enumerate() {
        *w = g.row(m)[i] & !g.row(p)[i] & !g.row(q)[i];
    }
    let start = m.max(q) + 1;
    bits::first_one_from(cand, start).map(|d| [m, p, q, d])
}

/// Lexicographically first co-claw, as `[isolated, triangle, triangle, triangle]`.
pub fn contains_co_claw(g: &Graph) -> Option<[usize; 4]> {
    contains_claw(&g.complement())
}

/// Lexicographically first diamond, as `[p, q, r, s]` where `pq` is the only
/// missing pair (`p < q`, `r < s`).
pub fn contains_diamond(g: &Graph) -> Option<[usize; 4]> {
    let n = g.order();
    let mut cand = bits::zeros(n);
    let sorted = |x: usize, y: usize| if x < y { (x, y) } else { (y, x) };
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let (ab, ac, bc) = (g.has_edge(a, b), g.has_edge(a, c), g.has_edge(b, c));
                let (ra, rb, rc) = (g.row(a), g.row(b), g.row(c));
                let found = match (ab, ac, bc) {
                    (true, true, true) => {
                        // d sees exactly two of a, b, c
                        for (i, w) in cand.iter_mut().enumerate() {
                            let (x, y, z) = (ra[i], rb[i], rc[i]);
                            *w = (x & y & !z) | (x & !y & z) | (!x & y & z);
                        }
                        bits::first_one_from(&cand, c + 1).map(|d| {
                            if !g.has_edge(d, c) {
                                [c, d, a, b]
                            } else if !g.has_edge(d, b) {
                                [b, d, a, c]
                            } else {
                                [a, d, b, c]
                            }
                        })
                    }
                    (true, true, false) | (true, false, true) | (false, true, true) => {
                        for (i, w) in cand.iter_mut().enumerate() {
                            *w = ra[i] & rb[i] & rc[i];
                        }
                        bits::first_one_from(&cand, c + 1).map(|d| {
                            let (m, p, q) = match (ab, ac, bc) {
                                (true, true, false) => (a, b, c),
                                (true, false, true) => (b, a, c),
                                _ => (c, a, b),
                            };
                            let (r, s) = sorted(m, d);
                            [p, q, r, s]
                        })
                    }
                    _ => None,
                };
                if found.is_some() {
                    return found;
                }
            }
        }
    }
    None
}

/// True when the graph has neither a claw nor a co-claw.
pub fn in_forb_claw_coclaw(g: &Graph) -> bool {
    contains_claw(g).is_none() && contains_co_claw(g).is_none()
}

/// No claw and no diamond: exactly the line graphs of triangle-free graphs.
pub fn is_claw_diamond_free(g: &Graph) -> bool {
    contains_claw(g).is_none() && contains_diamond(g).is_none()
}

/// Line graph: one vertex per edge of `root` (lexicographic order), adjacent
/// when the edges share an endpoint.
pub fn line_graph(root: &Graph) -> Graph {
    let edges: Vec<_> = root.edges().collect();
    let mut l = Graph::new(edges.len()).expect("line graph within the vertex cap");
    for (i, e) in edges.iter().enumerate() {
        for (j, f) in edges.iter().enumerate().skip(i + 1) {
            if e.common_endpoint(*f).is_some() {
                l.add_edge(i, j);
            }
        }
    }
    l
}

/// Result of classifying a graph against the claw/co-claw-free class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// Four vertices inducing the forbidden graph, in the detector's role order.
    NotInClass {
        kind: Forbidden,
        witness: [usize; 4],
    },
    /// Isomorphism onto [`named::a6`], `map[v]` is the image of `v`.
    IsA6(Vec<usize>),
    /// Isomorphism onto the complement of [`named::a6`].
    IsCoA6(Vec<usize>),
    /// Induced embedding into [`named::p9`].
    P9Induced(Vec<usize>),
    /// Every component is a path or a cycle of length at least 4.
    LinearForestOrCycles(Vec<ComponentShape>),
    /// The inner certificate applies to the complement.
    ComplementCase(Box<Certificate>),
}

impl Certificate {
    pub fn is_positive(&self) -> bool {
        !matches!(self, Certificate::NotInClass { .. })
    }

    pub fn tag(&self) -> &'static str {
        match self {
            Certificate::NotInClass { .. } => "NotInClass",
            Certificate::IsA6(_) => "IsA6",
            Certificate::IsCoA6(_) => "IsCoA6",
            Certificate::P9Induced(_) => "P9Induced",
            Certificate::LinearForestOrCycles(_) => "LinearForestOrCycles",
            Certificate::ComplementCase(_) => "ComplementCase",
        }
    }

    /// Re-checks the certificate against `g` from scratch.
    pub fn verify(&self, g: &Graph) -> bool {
        match self {
            Certificate::NotInClass { kind, witness } => {
                let pattern = match kind {
                    Forbidden::Claw => named::claw(),
                    Forbidden::CoClaw => named::co_claw(),
                };
                witness.iter().all(|&v| v < g.order()) && is_induced_embedding(&pattern, g, witness)
            }
            Certificate::IsA6(map) => is_isomorphism(g, &named::a6(), map),
            Certificate::IsCoA6(map) => is_isomorphism(g, &named::a6().complement(), map),
            Certificate::P9Induced(map) => is_induced_embedding(g, &named::p9(), map),
            Certificate::LinearForestOrCycles(shapes) => {
                shapes.iter().all(|s| admissible_component(*s)) && g.component_shapes() == *shapes
            }
            Certificate::ComplementCase(inner) => {
                inner.is_positive()
                    && !matches!(**inner, Certificate::ComplementCase(_))
                    && inner.verify(&g.complement())
            }
        }
    }
}

fn admissible_component(shape: ComponentShape) -> bool {
    match shape {
        ComponentShape::Path(_) => true,
        ComponentShape::Cycle(k) => k >= 4,
        ComponentShape::Other => false,
    }
}

fn component_certificate(g: &Graph) -> Option<Vec<ComponentShape>> {
    let shapes = g.component_shapes();
    shapes
        .iter()
        .all(|s| admissible_component(*s))
        .then_some(shapes)
}

/// Searches the positive cases in fixed priority order: `A_6`, co-`A_6`,
/// induced subgraph of `P_9`, components of `g`, components of the complement.
/// Detectors are not consulted.
pub fn positive_certificate(g: &Graph) -> Option<Certificate> {
    if g.order() == 6 {
        let a6 = named::a6();
        if let Some(map) = are_isomorphic(g, &a6) {
            return Some(Certificate::IsA6(map));
        }
        if let Some(map) = are_isomorphic(g, &a6.complement()) {
            return Some(Certificate::IsCoA6(map));
        }
    }
    if g.order() <= 9 {
        if let Some(map) = find_induced_embedding(g, &named::p9()) {
            return Some(Certificate::P9Induced(map));
        }
    }
    if let Some(shapes) = component_certificate(g) {
        return Some(Certificate::LinearForestOrCycles(shapes));
    }
    component_certificate(&g.complement()).map(|shapes| {
        Certificate::ComplementCase(Box::new(Certificate::LinearForestOrCycles(shapes)))
    })
}

/// Classifies `g`: a claw or co-claw witness when one exists, otherwise a
/// positive certificate.
///
/// # Panics
///
/// If `g` has no claw and no co-claw yet matches none of the positive cases,
/// which would contradict the structure theorem for the class.
pub fn classify_theorem1(g: &Graph) -> Certificate {
    if let Some(witness) = contains_claw(g) {
        return Certificate::NotInClass {
            kind: Forbidden::Claw,
            witness,
        };
    }
    if let Some(witness) = contains_co_claw(g) {
        return Certificate::NotInClass {
            kind: Forbidden::CoClaw,
            witness,
        };
    }
    positive_certificate(g).unwrap_or_else(|| {
        panic!(
            "claw/co-claw-free graph {} matched no case",
            crate::format::graph6_encode(g)
        )
    })
}

fn write_map(f: &mut fmt::Formatter<'_>, map: &[usize]) -> fmt::Result {
    for (i, j) in map.iter().enumerate() {
        write!(f, " {i}->{j}")?;
    }
    Ok(())
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())?;
        match self {
            Certificate::NotInClass { kind, witness } => {
                write!(f, " {}", kind.name())?;
                for v in witness {
                    write!(f, " {v}")?;
                }
                Ok(())
            }
            Certificate::IsA6(map) | Certificate::IsCoA6(map) | Certificate::P9Induced(map) => {
                write_map(f, map)
            }
            Certificate::LinearForestOrCycles(shapes) => {
                for s in shapes {
                    write!(f, " {s}")?;
                }
                Ok(())
            }
            Certificate::ComplementCase(inner) => write!(f, " {inner}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("malformed certificate: {0}")]
pub struct CertificateParseError(String);

fn parse_map(tokens: &[&str]) -> Result<Vec<usize>, CertificateParseError> {
    let mut map = Vec::with_capacity(tokens.len());
    for (expect, tok) in tokens.iter().enumerate() {
        let bad = || CertificateParseError(format!("bad mapping {tok:?}"));
        let (i, j) = tok.split_once("->").ok_or_else(bad)?;
        let i: usize = i.parse().map_err(|_| bad())?;
        if i != expect {
            return Err(CertificateParseError(format!(
                "mapping pairs out of order at {tok:?}"
            )));
        }
        map.push(j.parse().map_err(|_| bad())?);
    }
    Ok(map)
}

fn parse_shape(tok: &str) -> Result<ComponentShape, CertificateParseError> {
    let bad = || CertificateParseError(format!("bad component tag {tok:?}"));
    let (name, rest) = tok.split_once('(').ok_or_else(bad)?;
    let k: usize = rest
        .strip_suffix(')')
        .ok_or_else(bad)?
        .parse()
        .map_err(|_| bad())?;
    match name {
        "Path" => Ok(ComponentShape::Path(k)),
        "Cycle" => Ok(ComponentShape::Cycle(k)),
        _ => Err(bad()),
    }
}

fn parse_tokens(tokens: &[&str]) -> Result<Certificate, CertificateParseError> {
    let (&tag, rest) = tokens
        .split_first()
        .ok_or_else(|| CertificateParseError("empty".into()))?;
    match tag {
        "NotInClass" => {
            let kind = match rest.first() {
                Some(&"claw") => Forbidden::Claw,
                Some(&"co-claw") => Forbidden::CoClaw,
                other => return Err(CertificateParseError(format!("bad kind {other:?}"))),
            };
            let vs: Vec<usize> = rest[1..]
                .iter()
                .map(|t| t.parse())
                .collect::<Result<_, _>>()
                .map_err(|_| CertificateParseError("bad witness vertex".into()))?;
            let witness: [usize; 4] = vs
                .try_into()
                .map_err(|_| CertificateParseError("witness needs 4 vertices".into()))?;
            Ok(Certificate::NotInClass { kind, witness })
        }
        "IsA6" => Ok(Certificate::IsA6(parse_map(rest)?)),
        "IsCoA6" => Ok(Certificate::IsCoA6(parse_map(rest)?)),
        "P9Induced" => Ok(Certificate::P9Induced(parse_map(rest)?)),
        "LinearForestOrCycles" => Ok(Certificate::LinearForestOrCycles(
            rest.iter()
                .map(|t| parse_shape(t))
                .collect::<Result<_, _>>()?,
        )),
        "ComplementCase" => Ok(Certificate::ComplementCase(Box::new(parse_tokens(rest)?))),
        other => Err(CertificateParseError(format!("unknown tag {other:?}"))),
    }
}

impl FromStr for Certificate {
    type Err = CertificateParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let tokens: Vec<&str> = s.split_whitespace().collect();
        parse_tokens(&tokens)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::ComponentShape::{Cycle, Path};

    fn union(a: &Graph, b: &Graph) -> Graph {
        a.disjoint_union(b).unwrap()
    }

    #[test]
    fn claw_detection() {
        assert_eq!(contains_claw(&named::claw()), Some([0, 1, 2, 3]));
        assert_eq!(contains_claw(&named::cycle(6).unwrap()), None);
        assert_eq!(contains_claw(&named::a6().complement()), None);
        // center larger than the leaves
        let g = Graph::from_edges(4, [(3, 0), (3, 1), (3, 2)]).unwrap();
        assert_eq!(contains_claw(&g), Some([3, 0, 1, 2]));
    }

    #[test]
    fn co_claw_and_diamond_detection() {
        let k3k1 = union(&named::k3(), &Graph::new(1).unwrap());
        assert_eq!(contains_co_claw(&k3k1), Some([3, 0, 1, 2]));
        assert_eq!(contains_diamond(&named::p9()), None);
        assert_eq!(contains_diamond(&named::complete(4).unwrap()), None);
        assert_eq!(contains_diamond(&named::diamond()), Some([0, 1, 2, 3]));
        let d = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)]).unwrap();
        assert_eq!(contains_diamond(&d), Some([1, 3, 0, 2]));
    }

    #[test]
    fn membership() {
        assert!(in_forb_claw_coclaw(&named::a6()));
        assert!(in_forb_claw_coclaw(&named::path(10).unwrap()));
        assert!(!in_forb_claw_coclaw(&union(
            &named::k3(),
            &Graph::new(1).unwrap()
        )));
    }

    #[test]
    fn claw_diamond_free_examples() {
        assert!(is_claw_diamond_free(&named::p9()));
        assert!(!is_claw_diamond_free(&named::diamond()));
        assert!(is_claw_diamond_free(&named::cycle(4).unwrap()));
    }

    #[test]
    fn line_graph_of_k33_is_p9() {
        let k33 = Graph::from_edges(6, (0..3).flat_map(|a| (3..6).map(move |b| (a, b)))).unwrap();
        let l = line_graph(&k33);
        assert!(are_isomorphic(&l, &named::p9()).is_some());
    }

    #[test]
    fn classifier_examples() {
        let p9 = named::p9();
        let cert = classify_theorem1(&p9);
        assert_eq!(cert, Certificate::P9Induced((0..9).collect()));
        assert!(cert.verify(&p9));

        let g = union(&named::cycle(4).unwrap(), &named::path(3).unwrap());
        let cert = classify_theorem1(&g);
        assert_eq!(
            cert,
            Certificate::LinearForestOrCycles(vec![Cycle(4), Path(3)])
        );
        assert!(cert.verify(&g));

        let co_a6 = named::a6().complement();
        let cert = classify_theorem1(&co_a6);
        assert!(matches!(cert, Certificate::IsCoA6(_)));
        assert!(cert.verify(&co_a6));

        let cert = classify_theorem1(&named::claw());
        assert_eq!(cert.to_string(), "NotInClass claw 0 1 2 3");
        assert!(cert.verify(&named::claw()));
    }

    #[test]
    fn complement_case() {
        // complement of C4 + C5: not in P9 and not itself a linear forest
        let g = union(&named::cycle(4).unwrap(), &named::cycle(5).unwrap()).complement();
        let cert = classify_theorem1(&g);
        assert_eq!(
            cert,
            Certificate::ComplementCase(Box::new(Certificate::LinearForestOrCycles(vec![
                Cycle(4),
                Cycle(5)
            ])))
        );
        assert!(cert.verify(&g));
        assert!(!cert.verify(&g.complement()));
    }

    #[test]
    fn forged_certificates_fail() {
        let p9 = named::p9();
        assert!(!Certificate::P9Induced(vec![0; 9]).verify(&p9));
        assert!(!Certificate::IsA6((0..6).collect()).verify(&named::a6().complement()));
        let c3 = named::k3();
        assert!(!Certificate::LinearForestOrCycles(vec![Cycle(3)]).verify(&c3));
        let nested = Certificate::ComplementCase(Box::new(Certificate::ComplementCase(Box::new(
            Certificate::P9Induced((0..9).collect()),
        ))));
        assert!(!nested.verify(&p9));
    }

    #[test]
    fn text_round_trip() {
        let certs = [
            classify_theorem1(&named::p9()),
            classify_theorem1(&named::co_claw()),
            classify_theorem1(&named::a6()),
            Certificate::LinearForestOrCycles(vec![]),
            Certificate::ComplementCase(Box::new(Certificate::LinearForestOrCycles(vec![
                Cycle(6),
                Path(1),
            ]))),
        ];
        for c in certs {
            let text = c.to_string();
            assert_eq!(text.parse::<Certificate>().unwrap(), c, "{text}");
        }
        assert!("IsA6 1->0".parse::<Certificate>().is_err());
        assert!("Bogus".parse::<Certificate>().is_err());
        assert!("NotInClass claw 0 1 2".parse::<Certificate>().is_err());
    }
}
