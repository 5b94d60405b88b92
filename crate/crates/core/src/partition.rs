//! Integer partitions.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;
use crate::perm::CycleType;

/// A partition of `n` into weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct PartitionOfN {
    n: usize,
    parts: Vec<usize>,
}

impl PartitionOfN {
    /// Parts may come in any order; they are sorted descending.
    pub fn new(n: usize, mut parts: Vec<usize>) -> Result<Self, Error> {
        if parts.contains(&0) || parts.iter().sum::<usize>() != n {
            return Err(Error::InvalidPartition);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(PartitionOfN { n, parts })
    }

    /// Builds the partition from the display form (parts ≥ 2), padding
    /// with ones up to `n`.
    pub fn from_display(n: usize, parts: &[usize]) -> Result<Self, Error> {
        let used: usize = parts.iter().sum();
        if used > n || parts.iter().any(|&p| p < 2) {
            return Err(Error::InvalidPartition);
        }
        let mut all = parts.to_vec();
        all.extend(core::iter::repeat_n(1, n - used));
        PartitionOfN::new(n, all)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `m_i`, the number of parts equal to `i`.
    pub fn multiplicity(&self, i: usize) -> usize {
        self.parts.iter().filter(|&&p| p == i).count()
    }

    /// `(i, m_i)` for every `i` with `m_i > 0`, ascending in `i`.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in self.parts.iter().rev() {
            match out.last_mut() {
                Some((len, m)) if *len == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    pub fn cycle_type(&self) -> CycleType {
        CycleType::from_partition(self)
    }

    /// All partitions of `n` in reverse lexicographic order of their part
    /// lists: `(n)`, `(n-1, 1)`, …, `(1, …, 1)`.
    pub fn all(n: usize) -> Vec<PartitionOfN> {
        let mut out = Vec::new();
        if n == 0 {
            out.push(PartitionOfN { n: 0, parts: Vec::new() });
            return out;
        }
        let mut parts = vec![n];
        loop {
            out.push(PartitionOfN { n, parts: parts.clone() });
            // Rightmost part greater than one.
            let Some(idx) = parts.iter().rposition(|&p| p > 1) else {
                break;
            };
            let ones = parts.len() - idx - 1;
            let part = parts[idx] - 1;
            parts.truncate(idx);
            let mut rest = ones + 1 + part;
            while rest > 0 {
                let take = part.min(rest);
                parts.push(take);
                rest -= take;
            }
        }
        out
    }
}

impl fmt::Display for PartitionOfN {
    /// Cycle-type display: parts of size at least 2 only, `()` for all ones.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.cycle_type(), f)
    }
}

pub(crate) fn factorial(n: usize) -> Result<u64, Error> {
    (1..=n as u64).try_fold(1u64, |acc, i| acc.checked_mul(i)).ok_or(Error::Overflow)
}
