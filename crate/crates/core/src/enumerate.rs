//! Exhaustive enumeration of labeled graphs by edge bitmask.

use std::ops::Range;

use crate::error::GraphError;
use crate::graph::Graph;

/// Largest order accepted by [`enumerate_graphs`].
pub const MAX_ENUMERATION_ORDER: usize = 8;

/// Number of labeled graphs on `n` vertices, `2^(n(n-1)/2)`.
pub fn graph_count(n: usize) -> u64 {
    1u64 << (n * n.saturating_sub(1) / 2)
}

/// All graphs on `n` labeled vertices, in increasing edge-mask order (see
/// [`Graph::from_edge_mask`] for the bit layout).
pub fn enumerate_graphs(n: usize) -> Result<GraphEnumerator, GraphError> {
    if n > MAX_ENUMERATION_ORDER {
        return Err(GraphError::Oversize {
            what: "exhaustive enumeration",
            n,
            limit: MAX_ENUMERATION_ORDER,
        });
    }
    Ok(GraphEnumerator {
        n,
        masks: 0..graph_count(n),
    })
}

/// Iterator over a contiguous range of edge masks.
#[derive(Debug, Clone)]
pub struct GraphEnumerator {
    n: usize,
    masks: Range<u64>,
}

impl GraphEnumerator {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn masks(&self) -> Range<u64> {
        self.masks.clone()
    }

    /// Splits the remaining range into at most `parts` disjoint contiguous
    /// shards that together cover it.
    pub fn split(&self, parts: usize) -> Vec<GraphEnumerator> {
        let parts = parts.max(1) as u64;
        let Range { start, end } = self.masks;
        let len = end - start;
        let step = len.div_ceil(parts).max(1);
        let mut out = Vec::new();
        let mut lo = start;
        while lo < end {
            let hi = (lo + step).min(end);
            out.push(GraphEnumerator {
                n: self.n,
                masks: lo..hi,
            });
            lo = hi;
        }
        out
    }
}

impl Iterator for GraphEnumerator {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        let mask = self.masks.next()?;
        Some(Graph::from_edge_mask(self.n, mask).expect("order checked at construction"))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        self.masks.size_hint()
    }
}
