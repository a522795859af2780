//! The permutability statistic `pm(π)` and correspondent partitions.
//!
//! `[σ₁,…,σ_d]` is the partition of `[(d+1)m]` whose `i`-th block is
//! `{i, m+σ₁(i), …, dm+σ_d(i)}`: one element in each of the `d+1` consecutive
//! length-`m` segments. A partition embeds in some such correspondent partition
//! exactly when `[n]` can be cut into `d+1` consecutive intervals, each meeting
//! every block at most once. `pm(π)` is therefore one less than the minimum
//! number of intervals in such a cover, which a left-to-right greedy finds.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::partition::{for_each_completion, rgs_prefixes, SetPartition};
use crate::tuples::PermutationTuple;
use crate::{Error, Limits, Result};

/// Consecutive intervals covering `[n]`, stored by their cut points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntervalCover {
    /// First element of every interval except the first, increasing.
    pub boundaries: Vec<usize>,
    pub count: usize,
    n: usize,
}

impl IntervalCover {
    /// Intervals as inclusive `(first, last)` pairs.
    pub fn intervals(&self) -> Vec<(usize, usize)> {
        if self.n == 0 {
            return Vec::new();
        }
        let mut starts = vec![1];
        starts.extend(&self.boundaries);
        let mut ends: Vec<usize> = self.boundaries.iter().map(|b| b - 1).collect();
        ends.push(self.n);
        starts.into_iter().zip(ends).collect()
    }

    /// `true` when every interval meets every block of `partition` at most once.
    pub fn is_valid_for(&self, partition: &SetPartition) -> bool {
        self.intervals().iter().all(|&(a, b)| {
            let mut seen = vec![false; partition.block_count()];
            (a..=b).all(|e| !std::mem::replace(&mut seen[partition.rgs()[e - 1]], true))
        })
    }
}

impl std::fmt::Display for IntervalCover {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self
            .intervals()
            .iter()
            .map(|&(a, b)| (a..=b).map(|e| e.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        f.write_str(&parts.join("|"))
    }
}

fn greedy_boundaries(rgs: &[usize]) -> Vec<usize> {
    let blocks = rgs.iter().max().map_or(0, |&m| m + 1);
    // Stamp = index of the interval in which the block was last seen.
    let mut stamp = vec![usize::MAX; blocks];
    let mut interval = 0;
    let mut boundaries = Vec::new();
    for (i, &b) in rgs.iter().enumerate() {
        if stamp[b] == interval {
            interval += 1;
            boundaries.push(i + 1);
        }
        stamp[b] = interval;
    }
    boundaries
}

/// Minimum valid interval cover, built greedily with maximal leftmost intervals.
pub fn min_interval_cover(partition: &SetPartition) -> IntervalCover {
    let boundaries = greedy_boundaries(partition.rgs());
    IntervalCover { count: boundaries.len() + 1, boundaries, n: partition.n() }
}

pub(crate) fn permutability_of_rgs(rgs: &[usize]) -> usize {
    greedy_boundaries(rgs).len()
}

/// `pm(π)`: the least `d` such that some `[σ₁,…,σ_d]` contains `π`.
pub fn permutability(partition: &SetPartition) -> usize {
    permutability_of_rgs(partition.rgs())
}

/// Exhaustive minimum over all compositions of `[n]` into consecutive
/// intervals. Exponential; meant for cross-checking [`permutability`].
pub fn permutability_oracle(partition: &SetPartition) -> Result<usize> {
    let n = partition.n();
    if n > 10 {
        return Err(Error::ResourceLimit(format!("interval oracle limited to n <= 10, got {n}")));
    }
    if n == 0 {
        return Ok(0);
    }
    let rgs = partition.rgs();
    let mut best = usize::MAX;
    // Bit i set = cut between element i+1 and i+2.
    for cuts in 0u32..(1 << (n - 1)) {
        let mut valid = true;
        let mut seen: Vec<usize> = Vec::new();
        for (i, &block) in rgs.iter().enumerate() {
            if i > 0 && cuts & (1 << (i - 1)) != 0 {
                seen.clear();
            }
            if seen.contains(&block) {
                valid = false;
                break;
            }
            seen.push(block);
        }
        if valid {
            best = best.min(cuts.count_ones() as usize);
        }
    }
    Ok(best)
}

/// The partition `[σ₁,…,σ_d]` of `[(d+1)m]`.
pub fn correspondent_partition(tuple: &PermutationTuple) -> SetPartition {
    let m = tuple.n();
    let d = tuple.d();
    let mut rgs = vec![0; (d + 1) * m];
    for i in 0..m {
        rgs[i] = i;
        for (j, sigma) in tuple.perms().iter().enumerate() {
            rgs[(j + 1) * m + sigma.images()[i] - 1] = i;
        }
    }
    SetPartition::from_rgs_unchecked(rgs)
}

/// Partitions of the form `[σ]` or contained in one.
pub fn is_srp(partition: &SetPartition) -> bool {
    permutability(partition) <= 1
}

/// Number of partitions of `[n]` with each permutability value, ascending in `d`.
pub fn pm_distribution(n: usize, limits: &Limits) -> Result<Vec<(usize, u64)>> {
    if n > limits.max_partition_n {
        return Err(Error::ResourceLimit(format!(
            "pm distribution over [{n}] exceeds the enumeration limit {}",
            limits.max_partition_n
        )));
    }
    let split = n.min(5);
    let merged = rgs_prefixes(split)
        .into_par_iter()
        .map(|prefix| {
            let mut counts = BTreeMap::new();
            for_each_completion(&prefix, n, |rgs| {
                *counts.entry(permutability_of_rgs(rgs)).or_insert(0u64) += 1;
            });
            counts
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (d, c) in b {
                *a.entry(d).or_insert(0) += c;
            }
            a
        });
    Ok(merged.into_iter().collect())
}
