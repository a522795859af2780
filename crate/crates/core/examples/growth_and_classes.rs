//! Growth exponents, lower-bound certificates and class regimes.

use avoidance_lab::engine::{avoidance_sequence, classify_class, growth_fit, lower_bound_certificate};
use avoidance_lab::partition::{bell, SetPartition};
use avoidance_lab::Limits;
use num_bigint::BigUint;

fn main() -> avoidance_lab::Result<()> {
    let limits = Limits::default();
    for text in ["1/2/3", "123", "1234"] {
        let pattern: SetPartition = text.parse()?;
        let seq: Vec<BigUint> =
            avoidance_sequence(&pattern, 11, None, &limits)?.into_iter().map(|r| r.value).collect();
        let fit = growth_fit(&seq)?;
        println!(
            "{text}: alpha_11 = {:.4}, corrected {:.4}, hint {}",
            fit.final_alpha, fit.corrected_alpha, fit.d_hint
        );
    }
    let bells: Vec<BigUint> = (1..=12).map(bell).collect();
    println!("Bell numbers: hint {}", growth_fit(&bells)?.d_hint);

    let cert = lower_bound_certificate(&"123".parse()?, 8, 0)?;
    println!(
        "B'_8(123) >= {} ({} correspondent partitions checked, exhaustive {})",
        cert.certified_count, cert.verified_samples, cert.exhaustive
    );

    for basis in [vec![], vec!["1"], vec!["123"], vec!["1/2/3"], vec!["1234", "13/24"]] {
        let parsed = basis.iter().map(|b| b.parse()).collect::<avoidance_lab::Result<Vec<SetPartition>>>()?;
        println!("Av({}) : {}", basis.join(", "), classify_class(&parsed));
    }
    Ok(())
}
