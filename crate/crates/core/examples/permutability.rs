//! The permutability statistic, its interval-cover witness and
//! correspondent partitions.

use avoidance_lab::partition::SetPartition;
use avoidance_lab::permutability::{
    correspondent_partition, is_srp, min_interval_cover, permutability, permutability_oracle, pm_distribution,
};
use avoidance_lab::tuples::PermutationTuple;
use avoidance_lab::Limits;

fn main() -> avoidance_lab::Result<()> {
    for text in ["1/2/3", "14/23", "123", "1356/24", "12/34"] {
        let p: SetPartition = text.parse()?;
        let cover = min_interval_cover(&p);
        println!(
            "pm({p}) = {} (oracle {}), cover {cover}, srp: {}",
            permutability(&p),
            permutability_oracle(&p)?,
            is_srp(&p)
        );
    }

    let t: PermutationTuple = "231|312".parse()?;
    let c = correspondent_partition(&t);
    println!("[{}] = {c}, pm = {}", t.render(), permutability(&c));

    println!("pm distribution over partitions of [8]:");
    for (d, count) in pm_distribution(8, &Limits::default())? {
        println!("  pm = {d}: {count}");
    }
    Ok(())
}
