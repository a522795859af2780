mod common;

use avoidance_lab::partition::SetPartition;
use avoidance_lab::permutability::{
    correspondent_partition, is_srp, min_interval_cover, permutability, permutability_oracle,
    pm_distribution,
};
use avoidance_lab::permutation::Permutation;
use avoidance_lab::tuples::PermutationTuple;
use avoidance_lab::Limits;
use common::*;
use proptest::prelude::*;

/// Every d-tuple over S_m.
fn tuples(d: usize, m: usize) -> Vec<PermutationTuple> {
    let perms: Vec<Permutation> = Permutation::all(m).collect();
    let mut out = vec![Vec::new()];
    for _ in 0..d {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<Permutation>| {
                perms.iter().map(move |p| {
                    let mut next = prefix.clone();
                    next.push(p.clone());
                    next
                })
            })
            .collect();
    }
    out.into_iter().map(|v| PermutationTuple::new(v).unwrap()).collect()
}

#[test]
fn greedy_matches_oracle_up_to_eight() {
    for n in 0..=8 {
        for p in all_partitions(n) {
            assert_eq!(permutability(&p), permutability_oracle(&p).unwrap(), "{p}");
            let cover = min_interval_cover(&p);
            assert!(cover.is_valid_for(&p), "{p}: {cover}");
            assert_eq!(cover.count, permutability(&p) + 1);
        }
    }
}

#[test]
fn monotone_under_containment() {
    let all = all_partitions_up_to(5);
    for a in &all {
        for b in &all {
            if a.contains(b) {
                assert!(permutability(b) <= permutability(a), "{a} contains {b}");
            }
        }
    }
}

#[test]
fn singleton_blocks_do_not_matter() {
    for n in 0..=7 {
        for p in all_partitions(n) {
            assert_eq!(permutability(&p), permutability(&p.without_singletons()), "{p}");
        }
    }
}

#[test]
fn correspondent_partitions_have_permutability_d() {
    for d in 1..=3 {
        for m in 1..=3 {
            for t in tuples(d, m) {
                let c = correspondent_partition(&t);
                assert_eq!(c.n(), (d + 1) * m);
                assert_eq!(c.block_count(), m);
                assert_eq!(permutability(&c), d, "[{}]", t.render());
            }
        }
    }
}

/// `pm(π) = d` is witnessed by a correspondent partition over `S_k`, `k` the
/// number of blocks, and no `(d-1)`-tuple over `S_k` suffices. A missing
/// witness would only show that `k` is too small a search bound.
#[test]
fn permutability_agrees_with_containment_semantics() {
    let mut inconclusive = Vec::new();
    for n in 1..=5 {
        for p in all_partitions(n) {
            let (d, k) = (permutability(&p), p.block_count());
            if k > 4 || d == 0 {
                continue;
            }
            let witnessed = tuples(d, k).iter().any(|t| correspondent_partition(t).contains(&p));
            if !witnessed {
                inconclusive.push(p.render());
            }
            if d >= 2 {
                assert!(
                    !tuples(d - 1, k).iter().any(|t| correspondent_partition(t).contains(&p)),
                    "{p} fits a ({})-tuple",
                    d - 1
                );
            }
        }
    }
    if !inconclusive.is_empty() {
        eprintln!("INCONCLUSIVE (no witness within S_k): {inconclusive:?}");
    }
}

#[test]
fn distribution_sums_to_bell() {
    let limits = Limits::default();
    for n in 0..=9 {
        let dist = pm_distribution(n, &limits).unwrap();
        let total: u64 = dist.iter().map(|x| x.1).sum();
        assert_eq!(avoidance_lab::partition::bell(n), total.into());
        let direct = all_partitions(n.min(7)).len();
        if n <= 7 {
            assert_eq!(total as usize, direct);
        }
    }
    // The all-singleton partition is the only one with pm 0; 12...n has pm n-1.
    let dist = pm_distribution(6, &limits).unwrap();
    assert_eq!(dist.first(), Some(&(0, 1)));
    assert_eq!(dist.last(), Some(&(5, 1)));
}

proptest! {
    #[test]
    fn srp_means_pm_at_most_one(p in arb_partition(10)) {
        prop_assert_eq!(is_srp(&p), permutability(&p) <= 1);
    }

    #[test]
    fn cover_is_valid_and_tight(p in arb_partition(14)) {
        let cover = min_interval_cover(&p);
        prop_assert!(cover.is_valid_for(&p));
        let biggest = p.blocks().iter().map(Vec::len).max().unwrap_or(0);
        prop_assert!(cover.count >= biggest.max(1) || p.n() == 0);
    }

    #[test]
    fn layered_single_block_extremes(n in 1usize..12) {
        let one = SetPartition::from_rgs(vec![0; n]).unwrap();
        prop_assert_eq!(permutability(&one), n - 1);
        let singles = SetPartition::from_rgs((0..n).collect()).unwrap();
        prop_assert_eq!(permutability(&singles), 0);
    }
}
