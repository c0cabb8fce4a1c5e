//! Vertex sets and squarefree supports as `u32` bitmasks.
//!
//! Everything in this crate lives on at most 32 indices (the guards cap
//! well below that), so a set of vertices or variables is a single word.

/// A set of indices packed into a word; bit `i` set means index `i` is in.
pub type Mask = u32;

#[inline]
pub fn bit(i: usize) -> Mask {
    1u32 << i
}

#[inline]
pub fn has(mask: Mask, i: usize) -> bool {
    mask & bit(i) != 0
}

#[inline]
pub fn card(mask: Mask) -> usize {
    mask.count_ones() as usize
}

/// Full set {0, .., n-1}.
#[inline]
pub fn full(n: usize) -> Mask {
    if n == 0 {
        0
    } else {
        (u32::MAX) >> (32 - n)
    }
}

/// Iterate set indices in increasing order.
pub fn iter(mask: Mask) -> impl Iterator<Item = usize> {
    let mut m = mask;
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}

pub fn to_vec(mask: Mask) -> Vec<usize> {
    iter(mask).collect()
}

pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Mask {
    indices.into_iter().fold(0, |m, i| m | bit(i))
}

/// All submasks of `mask`, including `mask` itself and 0, in decreasing
/// numeric order.
pub fn submasks(mask: Mask) -> impl Iterator<Item = Mask> {
    let mut sub = mask;
    let mut done = false;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let cur = sub;
        if sub == 0 {
            done = true;
        } else {
            sub = (sub - 1) & mask;
        }
        Some(cur)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_and_iter() {
        assert_eq!(full(0), 0);
        assert_eq!(full(3), 0b111);
        assert_eq!(to_vec(0b1010), vec![1, 3]);
        assert_eq!(from_indices([0, 2]), 0b101);
    }

    #[test]
    fn submask_count() {
        assert_eq!(submasks(0b1011).count(), 8);
        assert_eq!(submasks(0).count(), 1);
    }
}
