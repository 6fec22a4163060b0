//! Isomorphism and k-hypomorphy up to complementation.

use crate::error::GraphError;
use crate::graph::Graph;
use crate::iso::are_isomorphic;

/// Largest order accepted by [`is_k_hypomorphic_up_to_comp`].
pub const MAX_HYPOMORPHY_ORDER: usize = 10;

/// `h` is isomorphic to `g` or to the complement of `g`.
pub fn iso_up_to_complementation(g: &Graph, h: &Graph) -> Result<bool, GraphError> {
    if g.order() != h.order() {
        return Err(GraphError::OrderMismatch {
            left: g.order(),
            right: h.order(),
        });
    }
    Ok(iso_up_to_comp_unchecked(g, h))
}

fn iso_up_to_comp_unchecked(g: &Graph, h: &Graph) -> bool {
    let n = g.order();
    let pairs = n * n.saturating_sub(1) / 2;
    let (eg, eh) = (g.size(), h.size());
    (eg == eh && are_isomorphic(g, h).is_some())
        || (eg + eh == pairs && are_isomorphic(&g.complement(), h).is_some())
}

/// Every k-subset induces subgraphs of `g` and `h` that are isomorphic up to
/// complementation. Requires `1 <= k <= n <= 10`.
pub fn is_k_hypomorphic_up_to_comp(g: &Graph, h: &Graph, k: usize) -> Result<bool, GraphError> {
    let n = g.order();
    if n != h.order() {
        return Err(GraphError::OrderMismatch {
            left: n,
            right: h.order(),
        });
    }
    if n > MAX_HYPOMORPHY_ORDER {
        return Err(GraphError::Oversize {
            what: "hypomorphy checks",
            n,
            limit: MAX_HYPOMORPHY_ORDER,
        });
    }
    if k == 0 || k > n {
        return Err(GraphError::InvalidOrder {
            what: "hypomorphy subset size",
            n: k,
        });
    }
    let mut subset = Vec::with_capacity(k);
    for mask in 0u32..1 << n {
        if mask.count_ones() as usize != k {
            continue;
        }
        subset.clear();
        subset.extend((0..n).filter(|&i| mask >> i & 1 == 1));
        let a = g.induced_unchecked(&subset);
        let b = h.induced_unchecked(&subset);
        if !iso_up_to_comp_unchecked(&a, &b) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decompose::{build_m, build_mpp};
    use crate::named;

    #[test]
    fn up_to_complementation() {
        let c5 = named::cycle(5).unwrap();
        assert!(iso_up_to_complementation(&c5, &c5.complement()).unwrap());
        let p9 = named::p9();
        assert!(iso_up_to_complementation(&p9, &p9.complement()).unwrap());
        assert!(
            !iso_up_to_complementation(&named::path(4).unwrap(), &named::cycle(4).unwrap())
                .unwrap()
        );
        assert!(iso_up_to_complementation(&p9, &c5).is_err());
    }

    #[test]
    fn hypomorphy_examples() {
        let g = named::a6();
        for k in 1..=6 {
            assert!(is_k_hypomorphic_up_to_comp(&g, &g, k).unwrap());
            assert!(is_k_hypomorphic_up_to_comp(&g, &g.complement(), k).unwrap());
        }
        let (m4, mpp4) = (build_m(4).unwrap(), build_mpp(4).unwrap());
        assert!(is_k_hypomorphic_up_to_comp(&m4, &mpp4, 3).unwrap());
        assert!(!is_k_hypomorphic_up_to_comp(&named::k3(), &named::path(3).unwrap(), 3).unwrap());
        assert!(is_k_hypomorphic_up_to_comp(&g, &g, 0).is_err());
        assert!(is_k_hypomorphic_up_to_comp(&g, &g, 7).is_err());
        let big = Graph::new(11).unwrap();
        assert!(is_k_hypomorphic_up_to_comp(&big, &big, 2).is_err());
    }
}
