//! Empirical growth exponents for counting sequences.
//!
//! For a sequence of order `c^n n^(αn)` the naive per-step estimate
//! `α̂_n = (ln a_n − ln a_{n−1}) / ln n` converges to `α`, but slowly, because
//! the constant `ln c + α` sits in the numerator. The ratio
//! `ln(a_n / a_{n−1}) ≈ const + α ln n` has the constant separated out, so a
//! least-squares slope of log-ratios against `ln n` reads off `α` directly.
//! That slope drives the regime hint; `α̂_n` is reported alongside.

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::partition::bell;
use crate::{Error, Result};

/// Log-ratios used by the slope fit.
const SLOPE_WINDOW: usize = 4;
/// Candidate `d` values for the `n^(n(1 − 1/d))` regimes.
const MAX_HINT_D: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RegimeHint {
    /// `n^(n(1 − 1/d))` up to an exponential factor; `d = 1` is exponential.
    Exponent { d: usize },
    Bell,
}

impl std::fmt::Display for RegimeHint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RegimeHint::Exponent { d } => write!(f, "{d}"),
            RegimeHint::Bell => f.write_str("bell"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GrowthEstimate {
    /// `(n, α̂_n)` for every `n` with `a_{n−1}` available, 4 decimals.
    pub per_n: Vec<(usize, f64)>,
    /// `α̂` at the largest `n`.
    #[serde(rename = "final")]
    pub final_alpha: f64,
    /// Slope of `ln(a_n/a_{n−1})` against `ln n` over the last few steps.
    pub corrected_alpha: f64,
    pub d_hint: RegimeHint,
}

fn round4(x: f64) -> f64 {
    (x * 1e4).round() / 1e4
}

fn ln_big(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 1000 {
        return x.to_f64().unwrap().ln();
    }
    let shift = bits - 64;
    (x >> shift).to_f64().unwrap().ln() + shift as f64 * std::f64::consts::LN_2
}

/// [`growth_fit_from`] with the first term taken as `a_1`.
pub fn growth_fit(seq: &[BigUint]) -> Result<GrowthEstimate> {
    growth_fit_from(1, seq)
}

/// Fits `seq[i] = a_{first_n + i}`.
pub fn growth_fit_from(first_n: usize, seq: &[BigUint]) -> Result<GrowthEstimate> {
    if let Some(index) = seq.iter().position(Zero::is_zero) {
        return Err(Error::NonPositiveTerm { index: first_n + index });
    }
    if first_n == 0 || seq.len() < 2 {
        return Err(Error::BadParameter(
            "growth fit needs at least two terms starting at n >= 1".into(),
        ));
    }
    let logs: Vec<f64> = seq.iter().map(ln_big).collect();
    // (n, ln a_n − ln a_{n−1}) for each consecutive pair.
    let steps: Vec<(usize, f64)> =
        (1..seq.len()).map(|i| (first_n + i, logs[i] - logs[i - 1])).collect();
    let per_n: Vec<(usize, f64)> =
        steps.iter().map(|&(n, step)| (n, round4(step / (n as f64).ln()))).collect();
    let final_alpha = per_n.last().unwrap().1;

    let window = &steps[steps.len().saturating_sub(SLOPE_WINDOW)..];
    let corrected_alpha = if window.len() >= 2 {
        round4(log_slope(window))
    } else {
        final_alpha
    };

    let last_n = first_n + seq.len() - 1;
    let is_bell = seq.len() >= 3 && seq.iter().zip(first_n..=last_n).all(|(a, n)| *a == bell(n));
    Ok(GrowthEstimate { per_n, final_alpha, corrected_alpha, d_hint: hint(corrected_alpha, is_bell) })
}

fn log_slope(points: &[(usize, f64)]) -> f64 {
    let xs: Vec<f64> = points.iter().map(|&(n, _)| (n as f64).ln()).collect();
    let k = points.len() as f64;
    let mx = xs.iter().sum::<f64>() / k;
    let my = points.iter().map(|p| p.1).sum::<f64>() / k;
    let num: f64 = xs.iter().zip(points).map(|(x, p)| (x - mx) * (p.1 - my)).sum();
    let den: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    num / den
}

fn hint(alpha: f64, is_bell: bool) -> RegimeHint {
    let top = 1.0 - 1.0 / MAX_HINT_D as f64;
    if is_bell || alpha > top {
        return RegimeHint::Bell;
    }
    let mut best = 1;
    let mut best_gap = f64::INFINITY;
    for d in 1..=MAX_HINT_D {
        let gap = (alpha - (1.0 - 1.0 / d as f64)).abs();
        // Strict comparison keeps the smaller d on ties.
        if gap < best_gap {
            best = d;
            best_gap = gap;
        }
    }
    RegimeHint::Exponent { d: best }
}
