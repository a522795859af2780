use num_bigint::BigUint;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{CountCache, ENGINE_VERSION};
use crate::partition::{embeds, enumerate_partitions, SetPartition};
use crate::{Error, Limits, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CountKind {
    PartitionAvoiders,
    PartitionAvoidersNoSingletons,
    TupleAvoiders,
    Bell,
}

/// One exact count, as stored in the cache and exported by the CLI.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountRecord {
    pub kind: CountKind,
    /// Canonical text of the pattern (empty for `bell`).
    pub pattern: String,
    pub n: usize,
    #[serde(with = "super::decimal")]
    pub value: BigUint,
    pub engine_version: String,
}

impl CountRecord {
    pub fn new(kind: CountKind, pattern: impl Into<String>, n: usize, value: BigUint) -> Self {
        CountRecord { kind, pattern: pattern.into(), n, value, engine_version: ENGINE_VERSION.into() }
    }
}

/// Depth at which the search tree is split across workers.
const SPLIT_DEPTH: usize = 5;

/// `B_n(π)`, or `B'_n(π)` when `no_singletons` is set.
///
/// Partitions are grown one element at a time in restricted-growth order. A
/// prefix that already contains `π` is dropped together with all its
/// extensions; only copies through the newest element need checking since the
/// parent prefix avoided `π`.
pub fn count_avoiders(
    pattern: &SetPartition,
    n: usize,
    no_singletons: bool,
    limits: &Limits,
) -> Result<BigUint> {
    if n > limits.max_count_n {
        return Err(Error::ResourceLimit(format!(
            "counting avoiders over [{n}] exceeds the limit {}",
            limits.max_count_n
        )));
    }
    if pattern.n() == 0 {
        return Ok(BigUint::zero());
    }
    let mut root = AvoiderSearch::new(pattern.rgs(), n, no_singletons);
    let mut prefixes = Vec::new();
    root.collect_prefixes(SPLIT_DEPTH.min(n), &mut prefixes);
    let total = prefixes
        .into_par_iter()
        .map(|prefix| {
            let mut search = AvoiderSearch::new(pattern.rgs(), n, no_singletons);
            for b in prefix {
                search.push(b);
            }
            BigUint::from(search.count())
        })
        .sum();
    Ok(total)
}

struct AvoiderSearch<'a> {
    pattern: &'a [usize],
    n: usize,
    no_singletons: bool,
    rgs: Vec<usize>,
    sizes: Vec<usize>,
}

impl<'a> AvoiderSearch<'a> {
    fn new(pattern: &'a [usize], n: usize, no_singletons: bool) -> Self {
        AvoiderSearch { pattern, n, no_singletons, rgs: Vec::with_capacity(n), sizes: Vec::new() }
    }

    fn push(&mut self, b: usize) {
        if b == self.sizes.len() {
            self.sizes.push(0);
        }
        self.sizes[b] += 1;
        self.rgs.push(b);
    }

    fn pop(&mut self) {
        let b = self.rgs.pop().unwrap();
        self.sizes[b] -= 1;
        if self.sizes[b] == 0 {
            self.sizes.pop();
        }
    }

    fn viable(&self) -> bool {
        if embeds(&self.rgs, self.pattern, true) {
            return false;
        }
        if self.no_singletons {
            // Each remaining element can rescue at most one singleton block.
            let singletons = self.sizes.iter().filter(|&&s| s == 1).count();
            return singletons <= self.n - self.rgs.len();
        }
        true
    }

    fn collect_prefixes(&mut self, depth: usize, out: &mut Vec<Vec<usize>>) {
        if self.rgs.len() == depth {
            out.push(self.rgs.clone());
            return;
        }
        for b in 0..=self.sizes.len() {
            self.push(b);
            if self.viable() {
                self.collect_prefixes(depth, out);
            }
            self.pop();
        }
    }

    fn count(&mut self) -> u64 {
        if self.rgs.len() == self.n {
            return 1;
        }
        let mut total = 0;
        for b in 0..=self.sizes.len() {
            self.push(b);
            if self.viable() {
                total += self.count();
            }
            self.pop();
        }
        total
    }
}

/// Filters every partition of `[n]` through full containment. Test oracle.
pub fn count_avoiders_naive(
    pattern: &SetPartition,
    n: usize,
    no_singletons: bool,
    limits: &Limits,
) -> Result<BigUint> {
    if n > 10 {
        return Err(Error::ResourceLimit(format!("naive counting limited to n <= 10, got {n}")));
    }
    let count = enumerate_partitions(n, limits)?
        .filter(|p| !(no_singletons && p.has_singletons()))
        .filter(|p| !p.contains(pattern))
        .count();
    Ok(BigUint::from(count))
}

/// `B_1(π), …, B_{n_max}(π)`, read from and written back to `cache` if given.
pub fn avoidance_sequence(
    pattern: &SetPartition,
    n_max: usize,
    mut cache: Option<&mut CountCache>,
    limits: &Limits,
) -> Result<Vec<CountRecord>> {
    let text = pattern.render();
    let kind = CountKind::PartitionAvoiders;
    let mut out = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let cached = cache.as_deref().and_then(|c| c.get(kind, &text, n));
        let record = match cached {
            Some(value) => CountRecord::new(kind, text.clone(), n, value),
            None => {
                let record = CountRecord::new(kind, text.clone(), n, count_avoiders(pattern, n, false, limits)?);
                if let Some(c) = cache.as_deref_mut() {
                    c.insert(&record)?;
                }
                record
            }
        };
        out.push(record);
    }
    Ok(out)
}
