//! Text interchange: graph6, plain edge lists and DOT.
//!
//! graph6 follows the nauty definition: an order header, then the upper
//! triangle of the adjacency matrix read column by column
//! (`(0,1), (0,2), (1,2), (0,3), ...`), packed big-endian into 6-bit groups,
//! each group offset by 63.

use std::fmt::Write as _;

use crate::error::ParseError;
use crate::graph::{Graph, MAX_VERTICES};

const HEADER: &str = ">>graph6<<";

pub fn graph6_encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        // MAX_VERTICES keeps us inside the 18-bit form.
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(63 + ((n >> shift) & 63) as u8);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (acc << (6 - filled)));
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

pub fn graph6_decode(text: &str) -> Result<Graph, ParseError> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(ParseError::Empty);
    }
    if let Some((offset, &byte)) = bytes
        .iter()
        .enumerate()
        .find(|(_, b)| !(63..=126).contains(*b))
    {
        return Err(ParseError::NonPrintable { offset, byte });
    }
    let group = |b: &[u8]| {
        b.iter()
            .fold(0usize, |acc, &x| acc << 6 | (x - 63) as usize)
    };
    let (n, body) = match bytes {
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(ParseError::BadHeader);
            }
            (group(&rest[..6]), &rest[6..])
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(ParseError::BadHeader);
            }
            (group(&rest[..3]), &rest[3..])
        }
        [first, rest @ ..] => ((first - 63) as usize, rest),
        [] => unreachable!(),
    };
    if n > MAX_VERTICES {
        return Err(ParseError::TooLarge(n));
    }
    let pairs = n * n.saturating_sub(1) / 2;
    let expected = pairs.div_ceil(6);
    if body.len() != expected {
        return Err(ParseError::BodyLength {
            expected,
            found: body.len(),
        });
    }
    let pad = expected * 6 - pairs;
    if pad > 0 && (body[expected - 1] - 63) & ((1 << pad) - 1) != 0 {
        return Err(ParseError::NonzeroPadding);
    }
    let mut g = Graph::new(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let b = body[k / 6] - 63;
            if b >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}

/// `"n m"` followed by one `"u v"` line per edge in lexicographic order.
pub fn edge_list_encode(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.order(), g.size());
    for e in g.edges() {
        let _ = writeln!(s, "{} {}", e.lo(), e.hi());
    }
    s
}

pub fn edge_list_decode(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let err = |line: usize, msg: String| ParseError::EdgeList { line, msg };
    let num = |line: usize, tok: &str| {
        tok.parse::<usize>().map_err(|_| {
            err(
                line,
                format!("expected a non-negative integer, got {tok:?}"),
            )
        })
    };
    let (hl, header) = lines.next().ok_or(ParseError::Empty)?;
    let head: Vec<&str> = header.split_whitespace().collect();
    let [n, m] = head.as_slice() else {
        return Err(err(hl, "header must be \"n m\"".into()));
    };
    let (n, m) = (num(hl, n)?, num(hl, m)?);
    if n > MAX_VERTICES {
        return Err(err(hl, format!("order {n} exceeds {MAX_VERTICES}")));
    }
    let mut g = Graph::new(n)?;
    let mut seen = 0;
    for (ln, line) in lines {
        let toks: Vec<&str> = line.split_whitespace().collect();
        let [u, v] = toks.as_slice() else {
            return Err(err(ln, "edge line must be \"u v\"".into()));
        };
        let (u, v) = (num(ln, u)?, num(ln, v)?);
        if u >= n || v >= n {
            return Err(err(ln, format!("endpoint out of range for n = {n}")));
        }
        if u == v {
            return Err(err(ln, format!("self-loop at {u}")));
        }
        if g.has_edge(u, v) {
            return Err(err(ln, format!("duplicate edge {u} {v}")));
        }
        g.add_edge(u, v);
        seen += 1;
    }
    if seen != m {
        return Err(err(hl, format!("header announces {m} edges, found {seen}")));
    }
    Ok(g)
}

/// Reads either format: input whose first non-blank line starts with a digit
/// is an edge list, anything else graph6.
pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty());
    match first {
        None => Err(ParseError::Empty),
        Some(l) if l.starts_with(|c: char| c.is_ascii_digit()) => edge_list_decode(text),
        Some(l) => graph6_decode(l),
    }
}

pub fn to_dot(g: &Graph) -> String {
    let mut s = String::from("graph G {\n");
    for v in 0..g.order() {
        let _ = writeln!(s, "  {v};");
    }
    for e in g.edges() {
        let _ = writeln!(s, "  {} -- {};", e.lo(), e.hi());
    }
    s.push_str("}\n");
    s
}
