//! Independent brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use avoidance_lab::hypergraph::OrderedHypergraph;
use avoidance_lab::partition::SetPartition;
use avoidance_lab::permutation::Permutation;
use proptest::prelude::*;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// All `k`-subsets of `[n]`, increasing, in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for e in start..=n {
            cur.push(e);
            go(e + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, n, k, &mut Vec::new(), &mut out);
    out
}

/// Restricted growth string of a block assignment, blocks relabelled by first appearance.
pub fn canonical_rgs(labels: &[usize]) -> Vec<usize> {
    let mut seen: Vec<usize> = Vec::new();
    labels
        .iter()
        .map(|l| match seen.iter().position(|s| s == l) {
            Some(i) => i,
            None => {
                seen.push(*l);
                seen.len() - 1
            }
        })
        .collect()
}

/// Containment straight from the definition: some subset restricts to the pattern.
pub fn brute_contains(host: &SetPartition, pattern: &SetPartition) -> bool {
    let k = pattern.n();
    if k > host.n() {
        return false;
    }
    subsets(host.n(), k).iter().any(|s| {
        let labels: Vec<usize> = s.iter().map(|&e| host.rgs()[e - 1]).collect();
        canonical_rgs(&labels) == pattern.rgs()
    })
}

/// Every partition of `[n]`, built by inserting element `n` into an existing block or a new one.
pub fn partitions_by_insertion(n: usize) -> Vec<Vec<Vec<usize>>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in partitions_by_insertion(n - 1) {
        for i in 0..p.len() {
            let mut q = p.clone();
            q[i].push(n);
            out.push(q);
        }
        let mut q = p.clone();
        q.push(vec![n]);
        out.push(q);
    }
    out
}

pub fn all_partitions(n: usize) -> Vec<SetPartition> {
    partitions_by_insertion(n)
        .into_iter()
        .map(|b| SetPartition::from_blocks(b).unwrap())
        .collect()
}

pub fn all_partitions_up_to(n: usize) -> Vec<SetPartition> {
    (0..=n).flat_map(all_partitions).collect()
}

/// Classical containment by trying every index subset.
pub fn brute_perm_contains(host: &[usize], pattern: &[usize]) -> bool {
    subsets(host.len(), pattern.len()).iter().any(|s| {
        (0..s.len()).all(|a| {
            (0..s.len()).all(|b| (host[s[a] - 1] < host[s[b] - 1]) == (pattern[a] < pattern[b]))
        })
    })
}

/// Positional inversion set computed directly.
pub fn inversion_set(p: &Permutation) -> Vec<(usize, usize)> {
    let v = p.images();
    let mut out = Vec::new();
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if v[i] > v[j] {
                out.push((i, j));
            }
        }
    }
    out
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

pub fn arb_partition(max_n: usize) -> impl Strategy<Value = SetPartition> {
    prop::collection::vec(0usize..max_n.max(1), 0..=max_n).prop_map(|raw| {
        let mut rgs = Vec::with_capacity(raw.len());
        let mut blocks = 0;
        for r in raw {
            let b = r.min(blocks);
            if b == blocks {
                blocks += 1;
            }
            rgs.push(b);
        }
        SetPartition::from_rgs(rgs).unwrap()
    })
}

pub fn arb_perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::new(v).unwrap())
}

/// Random hypergraph on `[n]`: each candidate edge is kept with probability `p`.
pub fn random_hypergraph(rng: &mut ChaCha8Rng, n: usize, sizes: &[usize], p: f64) -> OrderedHypergraph {
    let mut edges = Vec::new();
    for &t in sizes {
        for e in subsets(n, t) {
            if rng.random_bool(p) {
                edges.push(e);
            }
        }
    }
    OrderedHypergraph::new(n, edges).unwrap()
}
