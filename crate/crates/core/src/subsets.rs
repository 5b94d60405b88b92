//! Colexicographic ranking of `k`-subsets of `{0, …, n-1}`.
//!
//! Subsets are bit masks. The colex rank of `{c_0 < c_1 < … < c_{k-1}}` is
//! `Σ C(c_i, i + 1)`, so the subsets of `{0..m}` always come before those
//! containing `m`, independent of `n`.

use alloc::vec::Vec;

/// Largest `n` for which subsets fit in a `u64` mask.
pub const MAX_POINTS: usize = 64;

pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

pub fn rank(mask: u64) -> usize {
    let mut r = 0u64;
    let mut m = mask;
    let mut i = 0;
    while m != 0 {
        let c = m.trailing_zeros() as usize;
        i += 1;
        r += binomial(c, i);
        m &= m - 1;
    }
    r as usize
}

/// Inverse of [`rank`] for subsets of size `k`.
pub fn unrank(mut r: usize, k: usize) -> u64 {
    let mut mask = 0u64;
    for i in (1..=k).rev() {
        // Largest c with C(c, i) <= r.
        let mut c = i - 1;
        while binomial(c + 1, i) as usize <= r {
            c += 1;
        }
        r -= binomial(c, i) as usize;
        mask |= 1 << c;
    }
    mask
}

/// All `k`-subsets of `{0..n}` in colex order.
pub fn all(n: usize, k: usize) -> Vec<u64> {
    (0..binomial(n, k) as usize).map(|r| unrank(r, k)).collect()
}

pub fn elements(mask: u64) -> impl Iterator<Item = usize> {
    let mut m = mask;
    core::iter::from_fn(move || {
        if m == 0 {
            return None;
        }
        let c = m.trailing_zeros() as usize;
        m &= m - 1;
        Some(c)
    })
}

pub fn from_elements(points: &[usize]) -> u64 {
    points.iter().fold(0, |m, &p| m | 1 << p)
}
