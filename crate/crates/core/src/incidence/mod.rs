//! Inclusion matrices `W_tk` of t-subsets versus k-subsets, their kernels over
//! GF(2) and ranks over the rationals, and hypomorphy up to complementation.
//!
//! For `t = 2` a column vector indexed by pairs is a graph. A graph `U` lies in
//! the GF(2) kernel of `W_2k` transposed exactly when every k-subset spans an
//! even number of edges of `U`.

mod gf2;
mod hypomorphy;
mod rational;
mod subsets;

pub use gf2::{BinMatrix, BitVector};
pub use hypomorphy::{
    is_k_hypomorphic_up_to_comp, iso_up_to_complementation, MAX_HYPOMORPHY_ORDER,
};
pub use rational::RatMatrix;
pub use subsets::SubsetIndex;

use thiserror::Error;

use crate::graph::Graph;

/// Largest ground set for inclusion matrices.
pub const MAX_GROUND: usize = 16;

/// Largest ground set for [`wilson_kernel_members`].
pub const MAX_KERNEL_ENUMERATION: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IncidenceError {
    #[error("invalid parameters: {0}")]
    Parameters(String),
}

/// The `C(v,t) x C(v,k)` inclusion matrix: entry `(T, K)` is 1 iff `T ⊆ K`.
/// Rows and columns follow colex order.
pub fn build_w(t: usize, k: usize, v: usize) -> Result<BinMatrix, IncidenceError> {
    if t > k || k > v || v > MAX_GROUND {
        return Err(IncidenceError::Parameters(format!(
            "need t <= k <= v <= {MAX_GROUND}, got t = {t}, k = {k}, v = {v}"
        )));
    }
    let rows = SubsetIndex::new(v, t)?;
    let cols = SubsetIndex::new(v, k)?;
    let mut w = BinMatrix::zeros(rows.len(), cols.len());
    for (j, &kmask) in cols.masks().iter().enumerate() {
        for (i, &tmask) in rows.masks().iter().enumerate() {
            if tmask & !kmask == 0 {
                w.set(i, j, true);
            }
        }
    }
    Ok(w)
}

/// The edge indicator of `u` indexed by colex-ranked pairs.
pub fn graph_column_vector(u: &Graph) -> BitVector {
    let n = u.order();
    let mut x = BitVector::zeros(n * n.saturating_sub(1) / 2);
    let mut i = 0;
    for b in 1..n {
        for a in 0..b {
            x.set(i, u.has_edge(a, b));
            i += 1;
        }
    }
    x
}

/// Inverse of [`graph_column_vector`] for a ground set of size `v`.
pub fn graph_from_column_vector(v: usize, x: &BitVector) -> Result<Graph, IncidenceError> {
    let pairs = SubsetIndex::new(v, 2)?;
    if x.len() != pairs.len() {
        return Err(IncidenceError::Parameters(format!(
            "vector of length {} does not index the pairs of {v} points",
            x.len()
        )));
    }
    let mut g = Graph::new(v).map_err(|e| IncidenceError::Parameters(e.to_string()))?;
    for i in x.ones() {
        let m = pairs.masks()[i];
        g.add_edge(m.trailing_zeros() as usize, 31 - m.leading_zeros() as usize);
    }
    Ok(g)
}

/// GF(2) kernel dimension of `W_2k` transposed.
pub fn wilson_kernel_dimension(v: usize, k: usize) -> Result<usize, IncidenceError> {
    if k < 2 {
        return Err(IncidenceError::Parameters(format!("need k >= 2, got {k}")));
    }
    Ok(build_w(2, k, v)?.transpose().kernel().len())
}

/// How a kernel member decodes as a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KernelMemberKind {
    /// Complete bipartite, including the edgeless graph (one side empty).
    CompleteBipartite,
    /// Complement of a complete bipartite graph.
    CoCompleteBipartite,
    Other,
}

/// Whether `g` is `K_{A,B}` for some partition `A ∪ B` of its vertices, one
/// side possibly empty.
pub fn is_complete_bipartite(g: &Graph) -> bool {
    // complement must be a disjoint union of at most two cliques
    let co = g.complement();
    let parts = co.connected_components();
    parts.len() <= 2
        && parts.iter().all(|p| {
            let k = p.len();
            p.iter().all(|&v| co.degree(v) == k - 1)
        })
}

pub fn classify_kernel_member(g: &Graph) -> KernelMemberKind {
    if is_complete_bipartite(g) {
        KernelMemberKind::CompleteBipartite
    } else if is_complete_bipartite(&g.complement()) {
        KernelMemberKind::CoCompleteBipartite
    } else {
        KernelMemberKind::Other
    }
}

/// Every vector of the GF(2) kernel of `W_2k` transposed, decoded as a graph.
#[derive(Debug, Clone)]
pub struct KernelReport {
    pub v: usize,
    pub k: usize,
    pub dimension: usize,
    pub members: Vec<(Graph, KernelMemberKind)>,
}

impl KernelReport {
    /// True when every member is complete bipartite or the complement of one.
    pub fn all_bipartite_or_complement(&self) -> bool {
        self.members
            .iter()
            .all(|(_, kind)| *kind != KernelMemberKind::Other)
    }
}

/// Enumerates all `2^dim` kernel members for `k ≡ 1 (mod 4)`,
/// `2 <= k <= v - 2`, `v <= 8`.
pub fn wilson_kernel_members(v: usize, k: usize) -> Result<KernelReport, IncidenceError> {
    if k % 4 != 1 || k < 2 || k + 2 > v || v > MAX_KERNEL_ENUMERATION {
        return Err(IncidenceError::Parameters(format!(
            "need k = 1 mod 4, 2 <= k <= v - 2, v <= {MAX_KERNEL_ENUMERATION}; got k = {k}, v = {v}"
        )));
    }
    let basis = build_w(2, k, v)?.transpose().kernel();
    let dimension = basis.len();
    let mut members = Vec::with_capacity(1 << dimension);
    for combo in 0u32..1 << dimension {
        let mut x = BitVector::zeros(basis.first().map_or(0, BitVector::len));
        for (i, b) in basis.iter().enumerate() {
            if combo >> i & 1 == 1 {
                x.xor_assign(b);
            }
        }
        let g = graph_from_column_vector(v, &x)?;
        let kind = classify_kernel_member(&g);
        members.push((g, kind));
    }
    Ok(KernelReport {
        v,
        k,
        dimension,
        members,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;
    use subsets::binomial;

    #[test]
    fn w_examples() {
        assert_eq!(build_w(2, 2, 4).unwrap(), BinMatrix::identity(6));
        let w = build_w(2, 3, 4).unwrap();
        assert_eq!((w.rows(), w.cols()), (6, 4));
        for c in 0..w.cols() {
            assert_eq!((0..w.rows()).filter(|&r| w.get(r, c)).count(), 3);
        }
        for (k, v) in [(3, 6), (4, 7), (5, 8)] {
            let w = build_w(2, k, v).unwrap();
            for r in 0..w.rows() {
                let ones = (0..w.cols()).filter(|&c| w.get(r, c)).count();
                assert_eq!(ones, binomial(v - 2, k - 2));
            }
        }
        assert!(build_w(3, 2, 5).is_err());
        assert!(build_w(2, 3, 17).is_err());
    }

    #[test]
    fn column_vectors() {
        assert!(graph_column_vector(&Graph::new(5).unwrap()).is_zero());
        let k5 = named::complete(5).unwrap();
        assert_eq!(graph_column_vector(&k5).count_ones(), 10);
        let p9 = named::p9();
        let x = graph_column_vector(&p9);
        assert_eq!(graph_from_column_vector(9, &x).unwrap(), p9);
    }

    #[test]
    fn kernel_dimensions() {
        assert_eq!(wilson_kernel_dimension(6, 4).unwrap(), 1);
        assert_eq!(wilson_kernel_dimension(8, 5).unwrap(), 8);
        assert_eq!(wilson_kernel_dimension(6, 5).unwrap(), 10);
        let basis = build_w(2, 4, 6).unwrap().transpose().kernel();
        assert_eq!(
            graph_from_column_vector(6, &basis[0]).unwrap(),
            named::complete(6).unwrap()
        );
    }

    #[test]
    fn complete_bipartite_recognition() {
        assert!(is_complete_bipartite(&Graph::new(4).unwrap()));
        assert!(is_complete_bipartite(&named::claw()));
        assert!(is_complete_bipartite(&named::cycle(4).unwrap()));
        assert!(!is_complete_bipartite(&named::path(4).unwrap()));
        assert_eq!(
            classify_kernel_member(&named::complete(5).unwrap()),
            KernelMemberKind::CoCompleteBipartite
        );
        assert_eq!(
            classify_kernel_member(&named::path(4).unwrap()),
            KernelMemberKind::Other
        );
    }

    #[test]
    fn kernel_members_domain() {
        assert!(wilson_kernel_members(6, 4).is_err());
        assert!(wilson_kernel_members(6, 5).is_err());
        assert!(wilson_kernel_members(9, 5).is_err());
        let r = wilson_kernel_members(7, 5).unwrap();
        assert_eq!(r.members.len(), 1 << r.dimension);
        assert_eq!(r.members[0].0, Graph::new(7).unwrap());
        assert!(r.all_bipartite_or_complement());
    }
}
