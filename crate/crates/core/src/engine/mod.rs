//! Avoider counting, growth diagnostics, lower-bound certificates and
//! pattern-class classification.

mod cache;
mod certify;
mod classify;
mod count;
mod growth;

pub use cache::{CountCache, CACHE_ENV, CACHE_FILE};
pub use certify::{lower_bound_certificate, LowerBoundCertificate};
pub use classify::{classify_class, Classification, Regime};
pub use count::{
    avoidance_sequence, count_avoiders, count_avoiders_naive, CountKind, CountRecord,
};
pub use growth::{growth_fit, growth_fit_from, GrowthEstimate, RegimeHint};

/// Tag written into every cache record; entries from other versions are ignored.
pub const ENGINE_VERSION: &str = concat!("avoidance-lab/", env!("CARGO_PKG_VERSION"));

pub(crate) mod decimal {
    use num_bigint::BigUint;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
