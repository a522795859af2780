//! Parallel containment and avoider counts for tuples of permutations.

use avoidance_lab::permutability::correspondent_partition;
use avoidance_lab::tuples::{complement_at, contains_parallel, count_tuple_avoiders, weak_bruhat_leq, PermutationTuple};
use avoidance_lab::Limits;

fn main() -> avoidance_lab::Result<()> {
    let limits = Limits::default();
    let host: PermutationTuple = "132|231".parse()?;
    let pattern: PermutationTuple = "12|12".parse()?;
    println!(
        "{} contains {}: {} (correspondent partitions agree: {})",
        host.render(),
        pattern.render(),
        contains_parallel(&host, &pattern)?,
        correspondent_partition(&host).contains(&correspondent_partition(&pattern))
    );

    // Pairs avoiding (12,21) are exactly the weak-order comparable pairs.
    let crossing: PermutationTuple = "12|21".parse()?;
    for n in 1..=5 {
        println!("S_{n}^2(12,21) = {}", count_tuple_avoiders(&crossing, n, &limits)?);
    }
    let a = "132".parse()?;
    let b = "231".parse()?;
    println!("132 <= 231 in weak order: {}", weak_bruhat_leq(&a, &b)?);

    let flipped = complement_at(&crossing, 2)?;
    println!(
        "complementing coordinate 2 of {} gives {}; S_4^2 is {} for both",
        crossing.render(),
        flipped.render(),
        count_tuple_avoiders(&flipped, 4, &limits)?
    );

    let single: PermutationTuple = "123".parse()?;
    println!("S_6(123) = {}", count_tuple_avoiders(&single, 6, &limits)?);
    Ok(())
}
