//! Word-level helpers for bitsets stored as `[u64]`.

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

pub(crate) fn zeros(n: usize) -> Vec<u64> {
    vec![0; words_for(n)]
}

#[inline]
pub(crate) fn get(set: &[u64], i: usize) -> bool {
    set[i >> 6] >> (i & 63) & 1 == 1
}

#[inline]
pub(crate) fn assign(set: &mut [u64], i: usize, on: bool) {
    let bit = 1u64 << (i & 63);
    if on {
        set[i >> 6] |= bit;
    } else {
        set[i >> 6] &= !bit;
    }
}

pub(crate) fn count(set: &[u64]) -> usize {
    set.iter().map(|w| w.count_ones() as usize).sum()
}

/// Clears bits at positions `>= n`.
pub(crate) fn mask_tail(set: &mut [u64], n: usize) {
    let full = n >> 6;
    if full < set.len() {
        let rem = n & 63;
        set[full] &= if rem == 0 { 0 } else { (1u64 << rem) - 1 };
        for w in &mut set[full + 1..] {
            *w = 0;
        }
    }
}

pub(crate) fn is_subset(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

pub(crate) fn and_into(out: &mut [u64], a: &[u64], b: &[u64]) {
    for ((o, x), y) in out.iter_mut().zip(a).zip(b) {
        *o = x & y;
    }
}

/// Smallest set position `>= from`.
pub(crate) fn first_one_from(set: &[u64], from: usize) -> Option<usize> {
    let mut wi = from >> 6;
    if wi >= set.len() {
        return None;
    }
    let mut w = set[wi] & (!0u64 << (from & 63));
    loop {
        if w != 0 {
            return Some(wi * 64 + w.trailing_zeros() as usize);
        }
        wi += 1;
        if wi == set.len() {
            return None;
        }
        w = set[wi];
    }
}

pub(crate) fn ones(set: &[u64]) -> impl Iterator<Item = usize> + '_ {
    set.iter().enumerate().flat_map(|(wi, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                None
            } else {
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + b)
            }
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scanning() {
        let mut s = zeros(130);
        for i in [0, 63, 64, 129] {
            assign(&mut s, i, true);
        }
        assert_eq!(ones(&s).collect::<Vec<_>>(), vec![0, 63, 64, 129]);
        assert_eq!(first_one_from(&s, 1), Some(63));
        assert_eq!(first_one_from(&s, 65), Some(129));
        assert_eq!(first_one_from(&s, 130), None);
        mask_tail(&mut s, 64);
        assert_eq!(count(&s), 2);
    }
}
