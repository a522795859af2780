use std::fmt;

use serde::Serialize;

use crate::partition::SetPartition;
use crate::permutability::permutability;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Regime {
    Bell,
    EventuallyZero,
    Superexp,
    Exponential,
}

/// Growth regime of the class of partitions avoiding every basis element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub regime: Regime,
    /// For `Superexp`: the `d` in `n^(n(1 − 1/d))`.
    pub d: Option<usize>,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.regime, self.d) {
            (Regime::Bell, _) => f.write_str("bell"),
            (Regime::EventuallyZero, _) => f.write_str("eventually_zero"),
            (Regime::Exponential, _) => f.write_str("exponential"),
            (Regime::Superexp, Some(d)) => write!(f, "superexp({d})"),
            (Regime::Superexp, None) => f.write_str("superexp"),
        }
    }
}

/// Classifies `Av(basis)`: Bell growth for an empty basis, eventually zero
/// when the basis holds a partition of at most one element (every nonempty
/// partition contains it), otherwise by the least permutability in the basis.
pub fn classify_class(basis: &[SetPartition]) -> Classification {
    if basis.is_empty() {
        return Classification { regime: Regime::Bell, d: None };
    }
    if basis.iter().any(|p| p.n() <= 1) {
        return Classification { regime: Regime::EventuallyZero, d: None };
    }
    let d = basis.iter().map(permutability).min().unwrap();
    if d <= 1 {
        Classification { regime: Regime::Exponential, d: None }
    } else {
        Classification { regime: Regime::Superexp, d: Some(d) }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn basis(xs: &[&str]) -> Vec<SetPartition> {
        xs.iter().map(|s| s.parse().unwrap()).collect()
    }

    #[test]
    fn examples() {
        assert_eq!(classify_class(&[]).to_string(), "bell");
        assert_eq!(classify_class(&basis(&["1"])).to_string(), "eventually_zero");
        assert_eq!(classify_class(&basis(&["123"])).to_string(), "superexp(2)");
        assert_eq!(classify_class(&basis(&["1/2/3"])).to_string(), "exponential");
        assert_eq!(classify_class(&basis(&["14/23"])).to_string(), "exponential");
        assert_eq!(classify_class(&basis(&["1234", "123"])).to_string(), "superexp(2)");
        assert_eq!(classify_class(&basis(&["1234"])).to_string(), "superexp(3)");
        assert_eq!(classify_class(&basis(&["123", "1"])).to_string(), "eventually_zero");
    }
}
