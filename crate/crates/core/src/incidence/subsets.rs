//! Colexicographic ranking of k-subsets of a small ground set.
//!
//! Colex order on k-subsets of `0..v` is the numeric order of their
//! characteristic bitmasks, so the 2-subsets come out as
//! `{0,1}, {0,2}, {1,2}, {0,3}, ...`, the same order as graph edge masks.

use super::{IncidenceError, MAX_GROUND};

pub(crate) fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Bijection between the k-subsets of `0..v` and `0..C(v, k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetIndex {
    v: usize,
    k: usize,
    masks: Vec<u32>,
}

impl SubsetIndex {
    pub fn new(v: usize, k: usize) -> Result<Self, IncidenceError> {
        if v > MAX_GROUND || k > v {
            return Err(IncidenceError::Parameters(format!(
                "need k <= v <= {MAX_GROUND}, got k = {k}, v = {v}"
            )));
        }
        let mut masks = Vec::with_capacity(binomial(v, k));
        // Gosper's hack walks same-popcount masks in increasing order.
        if k == 0 {
            masks.push(0);
        } else {
            let mut m: u32 = (1 << k) - 1;
            while m < 1 << v {
                masks.push(m);
                let c = m & m.wrapping_neg();
                let r = m + c;
                m = (((r ^ m) >> 2) / c) | r;
            }
        }
        Ok(Self { v, k, masks })
    }

    pub fn ground(&self) -> usize {
        self.v
    }

    pub fn subset_size(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.masks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.masks.is_empty()
    }

    /// Subsets as bitmasks, in rank order.
    pub fn masks(&self) -> &[u32] {
        &self.masks
    }

    /// Rank of an ascending subset: the sum of `C(c_i, i)` over its elements
    /// `c_1 < ... < c_k`.
    pub fn rank(&self, subset: &[usize]) -> Option<usize> {
        if subset.len() != self.k
            || subset.windows(2).any(|w| w[0] >= w[1])
            || subset.last().is_some_and(|&c| c >= self.v)
        {
            return None;
        }
        Some(
            subset
                .iter()
                .enumerate()
                .map(|(i, &c)| binomial(c, i + 1))
                .sum(),
        )
    }

    pub fn unrank(&self, rank: usize) -> Option<Vec<usize>> {
        let m = *self.masks.get(rank)?;
        Some((0..self.v).filter(|&i| m >> i & 1 == 1).collect())
    }
}
