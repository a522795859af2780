//! Probability that a random (d+1)-dimensional order on n points is an
//! antichain, estimated by seeded sampling and compared with the exact value.

use avoidance_lab::tuples::{antichain_probability, exact_antichain_probability};
use avoidance_lab::Limits;

fn main() -> avoidance_lab::Result<()> {
    let limits = Limits::default();
    println!("d n   exact      estimate   std.err   z");
    for d in 1..=3 {
        for n in 2..=5 {
            let exact = exact_antichain_probability(d, n, &limits)?;
            let est = antichain_probability(d, n, 100_000, 1)?;
            let z = (est.estimate - exact) / est.standard_error;
            println!(
                "{d} {n}   {exact:.6}   {:.6}   {:.6}  {z:+.2}",
                est.estimate, est.standard_error
            );
        }
    }
    // Beyond exact reach, only the estimate is available.
    let est = antichain_probability(2, 12, 200_000, 7)?;
    println!("q_2(12) ~ {:.6} +- {:.6}", est.estimate, est.standard_error);
    Ok(())
}
