//! Exact avoider counts with the pruned counter, an on-disk cache and the
//! naive filter as a cross-check.
//!
//! Set `AVOIDANCE_LAB_CACHE` to keep the counts between runs.

use avoidance_lab::engine::{avoidance_sequence, count_avoiders, count_avoiders_naive, CountCache};
use avoidance_lab::partition::SetPartition;
use avoidance_lab::Limits;

fn main() -> avoidance_lab::Result<()> {
    let limits = Limits::default();
    let mut cache = CountCache::from_env()?;

    for text in ["123", "1/2/3", "14/23", "13/24", "12/34"] {
        let pattern: SetPartition = text.parse()?;
        let seq = avoidance_sequence(&pattern, 10, cache.as_mut(), &limits)?;
        let values: Vec<String> = seq.iter().map(|r| r.value.to_string()).collect();
        println!("B_n({text}), n=1..10: {}", values.join(", "));
    }

    let pattern: SetPartition = "123".parse()?;
    for n in [6, 8] {
        println!(
            "B'_{n}(123) = {} (naive {})",
            count_avoiders(&pattern, n, true, &limits)?,
            count_avoiders_naive(&pattern, n, true, &limits)?
        );
    }
    if let Some(cache) = &cache {
        println!("{} cached counts in {}", cache.len(), cache.path().display());
    }
    Ok(())
}
