//! Largest-weight hypergraphs avoiding a fixed pattern, by branch and bound.

use avoidance_lab::hypergraph::{max_weight_avoiding, OrderedHypergraph};
use avoidance_lab::Limits;

fn main() -> avoidance_lab::Result<()> {
    let limits = Limits::default();
    let crossing: OrderedHypergraph = "1,3;2,4".parse()?;

    println!("graphs avoiding {crossing}:");
    for n in 2..=7 {
        let r = max_weight_avoiding(&crossing, n, 2_000_000, Some(2), &limits)?;
        println!("  n={n}: {} edges, exact {}, {} nodes", r.best.edge_count(), r.exact, r.nodes);
    }

    println!("any edge sizes, avoiding {crossing}:");
    for n in 2..=4 {
        let r = max_weight_avoiding(&crossing, n, 2_000_000, None, &limits)?;
        println!("  n={n}: weight {} via {}", r.weight, r.best);
    }

    // A small budget returns the best hypergraph found so far.
    let r = max_weight_avoiding(&crossing, 8, 500, Some(2), &limits)?;
    println!("n=8 with budget 500: weight {}, exact {}", r.weight, r.exact);
    Ok(())
}
