//! Parsing, standard form, restriction and Klazar containment.
//!
//! ```text
//! cargo run --example partitions
//! ```

use avoidance_lab::partition::{bell, enumerate_partitions, SetPartition};
use avoidance_lab::Limits;

fn main() -> avoidance_lab::Result<()> {
    let p: SetPartition = "1635/24".parse()?;
    println!("standard form of 1635/24: {p}");

    let host: SetPartition = "136/5/27".parse()?;
    let restricted = host.restrict(&[2, 3, 6, 7])?;
    println!("{host} restricted to {{2,3,6,7}}: {restricted}");
    for pattern in ["14/23", "1/234", "12/34"] {
        let pattern: SetPartition = pattern.parse()?;
        println!("{host} contains {pattern}: {}", host.contains(&pattern));
    }

    for text in ["12/3456/789", "13/2456/789"] {
        let q: SetPartition = text.parse()?;
        println!("{q} layered: {}", q.is_layered());
    }

    // Partitions of [4] in restricted-growth order.
    let limits = Limits::default();
    let all: Vec<String> = enumerate_partitions(4, &limits)?.map(|q| q.to_string()).collect();
    println!("{} partitions of [4]: {}", bell(4), all.join(" "));

    let wide: SetPartition = "1,10/2,3,4,5,6,7,8,9".parse()?;
    println!("n = {} uses comma form: {wide}", wide.n());
    Ok(())
}
