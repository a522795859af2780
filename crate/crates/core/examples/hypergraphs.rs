//! Ordered hypergraphs: containment, projection, permutation hypergraphs and
//! interval contraction.

use avoidance_lab::hypergraph::{
    enumerate_perm_hypergraphs, interval_contract, interval_contract_multiplicity, partition_to_hypergraph,
    project, OrderedHypergraph, PermHypergraphSpec,
};
use avoidance_lab::partition::SetPartition;
use avoidance_lab::Limits;

fn main() -> avoidance_lab::Result<()> {
    let g: OrderedHypergraph = "1,3,5;2,4,6;1,2,6".parse()?;
    let h: OrderedHypergraph = "1,3;2,4".parse()?;
    println!("G = {g}, weight {}", g.weight());
    println!("G contains {h}: {}", g.contains(&h));

    let t: OrderedHypergraph = "1,3,5;2,4,6".parse()?;
    let p = project(&t, &[2])?;
    println!("dropping position 2 of {t}: {p}; contained: {}", t.contains(&p));

    let spec = PermHypergraphSpec { d: 2, k: 3 };
    let all: Vec<String> = enumerate_perm_hypergraphs(spec, &Limits::default())?.map(|x| x.to_string()).collect();
    println!("{} 2-permutation hypergraphs with 3 edges: {}", all.len(), all.join("  "));

    let wide: OrderedHypergraph = "1,5;2,6;3,7;4,8;1,2".parse()?;
    println!("{wide} contracted to 2 intervals: {}", interval_contract(&wide, 2)?);
    for (edge, count) in interval_contract_multiplicity(&wide, 2)? {
        println!("  {edge:?} x{count}");
    }

    let q: SetPartition = "136/27/4/5".parse()?;
    println!("{q} as a hypergraph: {}", partition_to_hypergraph(&q));
    Ok(())
}
