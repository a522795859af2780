//! Parallel pattern avoidance for `d`-tuples of permutations.
//!
//! `(σ₁,…,σ_d)` contains `(σ'₁,…,σ'_d)` when a single index set
//! `c₁ < … < c_m` makes every coordinate order-isomorphic to its pattern at
//! the same time. For `d = 1` this is classical permutation containment.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::permutation::Permutation;
use crate::{Error, Limits, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PermutationTuple {
    perms: Vec<Permutation>,
}

impl PermutationTuple {
    pub fn new(perms: Vec<Permutation>) -> Result<Self> {
        let first = perms
            .first()
            .ok_or_else(|| Error::BadParameter("a tuple needs at least one permutation".into()))?;
        if let Some(p) = perms.iter().find(|p| p.n() != first.n()) {
            return Err(Error::SizeMismatch(format!(
                "tuple mixes permutations of sizes {} and {}",
                first.n(),
                p.n()
            )));
        }
        Ok(PermutationTuple { perms })
    }

    /// Arity.
    pub fn d(&self) -> usize {
        self.perms.len()
    }

    /// Common size of the member permutations.
    pub fn n(&self) -> usize {
        self.perms[0].n()
    }

    pub fn perms(&self) -> &[Permutation] {
        &self.perms
    }

    /// The tuple `(12, 12, …, 12)` of arity `d`.
    pub fn all_ascents(d: usize) -> Self {
        PermutationTuple { perms: vec![Permutation::identity(2); d.max(1)] }
    }

    fn rows(&self) -> Vec<&[usize]> {
        self.perms.iter().map(Permutation::images).collect()
    }

    pub fn render(&self) -> String {
        self.perms.iter().map(Permutation::render).collect::<Vec<_>>().join("|")
    }
}

impl fmt::Display for PermutationTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl FromStr for PermutationTuple {
    type Err = Error;

    /// Permutations joined by `|`, e.g. `12|21`.
    fn from_str(s: &str) -> Result<Self> {
        let perms = s.trim().split('|').map(str::parse).collect::<Result<Vec<_>>>()?;
        PermutationTuple::new(perms)
    }
}

/// Parallel containment on raw one-line rows.
///
/// Indices are chosen left to right; each new index must agree with every
/// earlier one on relative order in all coordinates. With `anchor_last` the
/// final pattern index must be the last host index.
pub(crate) fn parallel_embeds(host: &[&[usize]], pattern: &[&[usize]], anchor_last: bool) -> bool {
    let n = host.first().map_or(0, |r| r.len());
    let m = pattern.first().map_or(0, |r| r.len());
    if m > n {
        return false;
    }
    if m == 0 {
        return !anchor_last || n == 0;
    }
    let mut chosen = Vec::with_capacity(m);
    embed_step(host, pattern, anchor_last, &mut chosen, 0, n, m)
}

fn embed_step(
    host: &[&[usize]],
    pattern: &[&[usize]],
    anchor_last: bool,
    chosen: &mut Vec<usize>,
    start: usize,
    n: usize,
    m: usize,
) -> bool {
    let j = chosen.len();
    if j == m {
        return true;
    }
    let first = if anchor_last && j == m - 1 { n - 1 } else { start };
    if first < start {
        return false;
    }
    for c in first..=n - (m - j) {
        let consistent = host.iter().zip(pattern).all(|(h, p)| {
            chosen
                .iter()
                .enumerate()
                .all(|(l, &cl)| (h[cl] < h[c]) == (p[l] < p[j]))
        });
        if consistent {
            chosen.push(c);
            if embed_step(host, pattern, anchor_last, chosen, c + 1, n, m) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

pub fn contains_parallel(host: &PermutationTuple, pattern: &PermutationTuple) -> Result<bool> {
    if host.d() != pattern.d() {
        return Err(Error::ArityMismatch { host: host.d(), pattern: pattern.d() });
    }
    Ok(parallel_embeds(&host.rows(), &pattern.rows(), false))
}

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// `n!^d`, the number of `d`-tuples over `S_n`.
pub fn tuple_space_size(n: usize, d: usize) -> BigUint {
    factorial(n).pow(d as u32)
}

/// `S_n^d(pattern)`: `d`-tuples over `S_n` avoiding `pattern` in parallel.
///
/// All coordinates are filled one index (column) at a time; a column prefix
/// that already contains the pattern is pruned, since every extension keeps
/// that copy. Work is split across threads by the first column.
pub fn count_tuple_avoiders(pattern: &PermutationTuple, n: usize, limits: &Limits) -> Result<BigUint> {
    let d = pattern.d();
    if pattern.n() > n {
        return Ok(tuple_space_size(n, d));
    }
    let work = tuple_space_size(n, d);
    if work > BigUint::from(limits.max_tuple_work) || n > 63 {
        return Err(Error::ResourceLimit(format!(
            "{n}!^{d} tuples exceeds the work limit {}",
            limits.max_tuple_work
        )));
    }
    if n == 0 {
        return Ok(BigUint::one());
    }
    let rows: Vec<Vec<usize>> = pattern.perms.iter().map(|p| p.images().to_vec()).collect();
    let first_columns = column_choices(n, d);
    let total: BigUint = first_columns
        .into_par_iter()
        .map(|column| {
            let mut counter = TupleCounter::new(n, &rows);
            for (i, &v) in column.iter().enumerate() {
                counter.place(i, v);
            }
            BigUint::from(counter.after_column())
        })
        .sum();
    Ok(total)
}

fn column_choices(n: usize, d: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..d {
        out = out
            .into_iter()
            .flat_map(|c| {
                (1..=n).map(move |v| {
                    let mut c = c.clone();
                    c.push(v);
                    c
                })
            })
            .collect();
    }
    out
}

struct TupleCounter<'a> {
    n: usize,
    pattern: &'a [Vec<usize>],
    rows: Vec<Vec<usize>>,
    used: Vec<u64>,
}

impl<'a> TupleCounter<'a> {
    fn new(n: usize, pattern: &'a [Vec<usize>]) -> Self {
        let d = pattern.len();
        TupleCounter {
            n,
            pattern,
            rows: vec![Vec::with_capacity(n); d],
            used: vec![0; d],
        }
    }

    fn place(&mut self, coord: usize, value: usize) {
        self.rows[coord].push(value);
        self.used[coord] |= 1 << value;
    }

    fn unplace(&mut self, coord: usize) {
        let v = self.rows[coord].pop().unwrap();
        self.used[coord] &= !(1 << v);
    }

    // Called once every coordinate has the same length.
    fn after_column(&mut self) -> u64 {
        let host: Vec<&[usize]> = self.rows.iter().map(Vec::as_slice).collect();
        let pattern: Vec<&[usize]> = self.pattern.iter().map(Vec::as_slice).collect();
        if parallel_embeds(&host, &pattern, true) {
            return 0;
        }
        if self.rows[0].len() == self.n {
            return 1;
        }
        self.fill(0)
    }

    fn fill(&mut self, coord: usize) -> u64 {
        if coord == self.rows.len() {
            return self.after_column();
        }
        let mut total = 0;
        for v in 1..=self.n {
            if self.used[coord] & (1 << v) == 0 {
                self.place(coord, v);
                total += self.fill(coord + 1);
                self.unplace(coord);
            }
        }
        total
    }
}

/// Replaces coordinate `index` (1-based) by its complement `v ↦ n + 1 - v`.
pub fn complement_at(tuple: &PermutationTuple, index: usize) -> Result<PermutationTuple> {
    if index == 0 || index > tuple.d() {
        return Err(Error::IndexOutOfRange { index, d: tuple.d() });
    }
    let mut perms = tuple.perms.clone();
    perms[index - 1] = perms[index - 1].complement();
    Ok(PermutationTuple { perms })
}

/// Weak order by inclusion of positional inversion sets.
pub fn weak_bruhat_leq(a: &Permutation, b: &Permutation) -> Result<bool> {
    if a.n() != b.n() {
        return Err(Error::SizeMismatch(format!("sizes {} and {}", a.n(), b.n())));
    }
    let (x, y) = (a.images(), b.images());
    let n = x.len();
    Ok((0..n).all(|i| (i + 1..n).all(|j| x[i] < x[j] || y[i] > y[j])))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MonteCarloEstimate {
    pub estimate: f64,
    pub samples: u64,
    pub standard_error: f64,
    pub seed: u64,
}

impl MonteCarloEstimate {
    fn from_hits(hits: u64, samples: u64, seed: u64) -> Self {
        let estimate = hits as f64 / samples as f64;
        let standard_error = (estimate * (1.0 - estimate) / samples as f64).sqrt();
        MonteCarloEstimate { estimate, samples, standard_error, seed }
    }
}

/// Draws a uniform permutation of `[n]` by Fisher–Yates.
fn shuffle_into(rng: &mut ChaCha8Rng, out: &mut [usize]) {
    for (i, slot) in out.iter_mut().enumerate() {
        *slot = i + 1;
    }
    for i in (1..out.len()).rev() {
        let j = rng.random_range(0..=i);
        out.swap(i, j);
    }
}

/// No pair `i < j` is increasing in every coordinate.
fn is_antichain(rows: &[Vec<usize>], n: usize) -> bool {
    !(0..n).any(|i| (i + 1..n).any(|j| rows.iter().all(|r| r[i] < r[j])))
}

/// Monte Carlo estimate of `q_d(n)`, the probability that `d` uniform
/// permutations of `[n]` avoid `(12,…,12)` in parallel, i.e. that a random
/// `(d+1)`-dimensional order on `n` points is an antichain.
///
/// Sample `k` draws from a ChaCha8 stream keyed by `(seed, k)`, so the result
/// does not depend on how samples are spread over threads.
pub fn antichain_probability(d: usize, n: usize, samples: u64, seed: u64) -> Result<MonteCarloEstimate> {
    if d == 0 {
        return Err(Error::BadParameter("d must be positive".into()));
    }
    if samples == 0 {
        return Err(Error::BadParameter("samples must be positive".into()));
    }
    const CHUNK: u64 = 4096;
    let chunks = samples.div_ceil(CHUNK);
    let hits: u64 = (0..chunks)
        .into_par_iter()
        .map(|chunk| {
            let mut rows = vec![vec![0; n]; d];
            let end = ((chunk + 1) * CHUNK).min(samples);
            (chunk * CHUNK..end)
                .filter(|&k| {
                    let mut rng = ChaCha8Rng::seed_from_u64(seed);
                    rng.set_stream(k);
                    for row in rows.iter_mut() {
                        shuffle_into(&mut rng, row);
                    }
                    is_antichain(&rows, n)
                })
                .count() as u64
        })
        .sum();
    Ok(MonteCarloEstimate::from_hits(hits, samples, seed))
}

/// Exact `q_d(n) = S_n^d(12,…,12) / n!^d`.
pub fn exact_antichain_probability(d: usize, n: usize, limits: &Limits) -> Result<f64> {
    let avoiders = count_tuple_avoiders(&PermutationTuple::all_ascents(d), n, limits)?;
    let total = tuple_space_size(n, d);
    Ok(avoiders.to_f64().unwrap_or(f64::NAN) / total.to_f64().unwrap_or(f64::NAN))
}
