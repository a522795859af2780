//! Exact enumeration and search for pattern avoidance in three closely
//! related settings:
//!
//! * set partitions under Klazar containment ([`partition`]), together with
//!   the permutability statistic ([`permutability`]);
//! * `d`-tuples of permutations under parallel containment ([`tuples`]);
//! * ordered hypergraphs ([`hypergraph`]).
//!
//! The [`engine`] module counts avoiders, fits growth exponents, produces
//! lower-bound certificates and classifies pattern classes. [`cli`] is the
//! command-line surface used by the `avoidance-lab` binary.
//!
//! ```
//! use avoidance_lab::partition::SetPartition;
//!
//! let host: SetPartition = "136/5/27".parse().unwrap();
//! let pattern: SetPartition = "14/23".parse().unwrap();
//! assert!(host.contains(&pattern));
//! ```

pub mod cli;
pub mod engine;
pub mod error;
pub mod hypergraph;
pub mod partition;
pub mod permutability;
pub mod permutation;
pub mod tuples;

pub use error::{Error, Result};

/// Size guards shared by the exhaustive operations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest `n` for which all partitions of `[n]` may be enumerated.
    pub max_partition_n: usize,
    /// Largest `n` accepted by the pruned avoider counter.
    pub max_count_n: usize,
    /// Upper bound on `n!^d` for parallel tuple counting.
    pub max_tuple_work: u128,
    /// Upper bound on `d * k` for permutation-hypergraph enumeration.
    pub max_perm_hypergraph_vertices: usize,
    /// Largest vertex count for the extremal hypergraph search.
    pub max_extremal_n: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_partition_n: 14,
            max_count_n: 12,
            max_tuple_work: 100_000_000,
            max_perm_hypergraph_vertices: 16,
            max_extremal_n: 8,
        }
    }
}
