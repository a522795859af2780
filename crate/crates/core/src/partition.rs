//! Set partitions of `[n]` in standard form, Klazar containment and
//! exhaustive generation.
//!
//! A partition is stored twice: as its block list (standard form, each block
//! increasing, blocks ordered by minimum) and as its restricted growth string,
//! where element `i` maps to the index of its block. The growth string gives
//! O(1) same-block queries and a natural lexicographic enumeration order.
//!
//! Text format: blocks separated by `/`. When `n <= 9` a block may be written
//! as a run of digits (`1356/24`); otherwise elements are comma separated
//! (`1,10/2,3,4,5,6,7,8,9`). A text containing no comma and at most nine
//! digits is read as digit runs, anything else as comma form.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::{Error, Limits, Result};

const UNSET: usize = usize::MAX;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    // Restricted growth string; 0-based block index per element.
    rgs: Vec<usize>,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    /// The partition of the empty ground set.
    pub fn empty() -> Self {
        SetPartition { rgs: Vec::new(), blocks: Vec::new() }
    }

    /// Builds a partition from a restricted growth string (0-based block labels,
    /// `rgs[0] == 0`, each label at most one more than the running maximum).
    pub fn from_rgs(rgs: Vec<usize>) -> Result<Self> {
        let mut next = 0usize;
        for (i, &b) in rgs.iter().enumerate() {
            if b > next {
                return Err(Error::NotAPartition(format!(
                    "label {b} at position {} skips ahead of {next}",
                    i + 1
                )));
            }
            if b == next {
                next += 1;
            }
        }
        Ok(Self::from_rgs_unchecked(rgs))
    }

    pub(crate) fn from_rgs_unchecked(rgs: Vec<usize>) -> Self {
        let count = rgs.iter().map(|&b| b + 1).max().unwrap_or(0);
        let mut blocks = vec![Vec::new(); count];
        for (i, &b) in rgs.iter().enumerate() {
            blocks[b].push(i + 1);
        }
        SetPartition { rgs, blocks }
    }

    /// Puts arbitrary disjoint blocks covering `[n]` into standard form.
    pub fn from_blocks<I, B>(blocks: I) -> Result<Self>
    where
        I: IntoIterator<Item = B>,
        B: IntoIterator<Item = usize>,
    {
        let blocks: Vec<Vec<usize>> = blocks.into_iter().map(|b| b.into_iter().collect()).collect();
        let n: usize = blocks.iter().map(Vec::len).sum();
        let mut owner = vec![UNSET; n];
        for (bi, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::NotAPartition("empty block".into()));
            }
            for &e in block {
                if e == 0 || e > n {
                    return Err(Error::NotAPartition(format!(
                        "element {e} leaves a gap in 1..={n}"
                    )));
                }
                if owner[e - 1] != UNSET {
                    return Err(Error::NotAPartition(format!("element {e} appears twice")));
                }
                owner[e - 1] = bi;
            }
        }
        // Relabel blocks in order of first appearance, which is order of minima.
        let mut relabel = vec![UNSET; blocks.len()];
        let mut next = 0;
        let rgs = owner
            .into_iter()
            .map(|b| {
                if relabel[b] == UNSET {
                    relabel[b] = next;
                    next += 1;
                }
                relabel[b]
            })
            .collect();
        Ok(Self::from_rgs_unchecked(rgs))
    }

    /// Ground-set size.
    pub fn n(&self) -> usize {
        self.rgs.len()
    }

    /// Blocks in standard form (1-based elements).
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Restricted growth string with 0-based block labels.
    pub fn rgs(&self) -> &[usize] {
        &self.rgs
    }

    /// Index (0-based, standard order) of the block holding `element`.
    pub fn block_of(&self, element: usize) -> Option<usize> {
        element.checked_sub(1).and_then(|i| self.rgs.get(i)).copied()
    }

    pub fn same_block(&self, a: usize, b: usize) -> bool {
        matches!((self.block_of(a), self.block_of(b)), (Some(x), Some(y)) if x == y)
    }

    pub fn has_singletons(&self) -> bool {
        self.blocks.iter().any(|b| b.len() == 1)
    }

    /// The partition with every one-element block deleted, relabelled onto
    /// `[n - #singletons]`.
    pub fn without_singletons(&self) -> SetPartition {
        let keep: Vec<usize> = (1..=self.n())
            .filter(|&e| self.blocks[self.rgs[e - 1]].len() > 1)
            .collect();
        self.restrict_unchecked(&keep)
    }

    /// Pullback along the order-preserving injection `[|S|] -> [n]` with image `S`.
    pub fn restrict(&self, subset: &[usize]) -> Result<SetPartition> {
        for (i, &e) in subset.iter().enumerate() {
            if e == 0 || e > self.n() {
                return Err(Error::OutOfRange { element: e, n: self.n() });
            }
            if i > 0 && subset[i - 1] >= e {
                return Err(Error::BadParameter(
                    "restriction subset must be strictly increasing".into(),
                ));
            }
        }
        Ok(self.restrict_unchecked(subset))
    }

    fn restrict_unchecked(&self, subset: &[usize]) -> SetPartition {
        let mut relabel = vec![UNSET; self.block_count()];
        let mut next = 0;
        let rgs = subset
            .iter()
            .map(|&e| {
                let b = self.rgs[e - 1];
                if relabel[b] == UNSET {
                    relabel[b] = next;
                    next += 1;
                }
                relabel[b]
            })
            .collect();
        Self::from_rgs_unchecked(rgs)
    }

    /// Klazar containment: some restriction of `self` standardizes to `pattern`.
    pub fn contains(&self, pattern: &SetPartition) -> bool {
        embeds(&self.rgs, &pattern.rgs, false)
    }

    /// Every block is an interval of consecutive integers.
    pub fn is_layered(&self) -> bool {
        self.blocks.iter().all(|b| b[b.len() - 1] - b[0] + 1 == b.len())
    }

    /// Renders in standard form: digit runs when `n <= 9`, comma form otherwise.
    pub fn render(&self) -> String {
        if self.n() <= 9 {
            self.render_with("")
        } else {
            self.render_comma()
        }
    }

    /// Renders in comma form regardless of size.
    pub fn render_comma(&self) -> String {
        self.render_with(",")
    }

    fn render_with(&self, sep: &str) -> String {
        self.blocks
            .iter()
            .map(|b| b.iter().map(usize::to_string).collect::<Vec<_>>().join(sep))
            .collect::<Vec<_>>()
            .join("/")
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl FromStr for SetPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_partition(s)
    }
}

/// Parses slash notation; the input need not be in standard form. Elements
/// below the largest listed one that do not appear are taken as singletons.
pub fn parse_partition(text: &str) -> Result<SetPartition> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(SetPartition::empty());
    }
    if let Some(c) = text.chars().find(|c| !(c.is_ascii_digit() || *c == '/' || *c == ',')) {
        return Err(Error::MalformedText(format!("unexpected character {c:?} in {text:?}")));
    }
    let digit_count = text.chars().filter(char::is_ascii_digit).count();
    let comma_form = text.contains(',') || digit_count > 9;
    let mut blocks = Vec::new();
    for token in text.split('/') {
        if token.is_empty() {
            return Err(Error::MalformedText(format!("empty block in {text:?}")));
        }
        let block = if comma_form {
            parse_comma_list(token)?
        } else {
            token.bytes().map(|b| (b - b'0') as usize).collect()
        };
        blocks.push(block);
    }
    // Elements below the maximum that the text never mentions are singletons,
    // so `136/5/27` is the partition 136/27/4/5 of [7].
    let max = blocks.iter().flatten().copied().max().unwrap_or(0);
    let mut listed = vec![false; max + 1];
    blocks.iter().flatten().for_each(|&e| listed[e] = true);
    blocks.extend((1..=max).filter(|&e| !listed[e]).map(|e| vec![e]));
    SetPartition::from_blocks(blocks)
}

pub(crate) fn parse_comma_list(token: &str) -> Result<Vec<usize>> {
    token
        .split(',')
        .map(|part| {
            if part.is_empty() {
                return Err(Error::MalformedText(format!("empty element in {token:?}")));
            }
            part.parse::<usize>()
                .map_err(|e| Error::MalformedText(format!("{part:?}: {e}")))
        })
        .collect()
}

/// Standard form of a list of blocks.
pub fn standardize<I, B>(blocks: I) -> Result<SetPartition>
where
    I: IntoIterator<Item = B>,
    B: IntoIterator<Item = usize>,
{
    SetPartition::from_blocks(blocks)
}

pub fn restrict(partition: &SetPartition, subset: &[usize]) -> Result<SetPartition> {
    partition.restrict(subset)
}

pub fn contains_partition(host: &SetPartition, pattern: &SetPartition) -> bool {
    host.contains(pattern)
}

pub fn is_layered(partition: &SetPartition) -> bool {
    partition.is_layered()
}

/// Containment on restricted growth strings.
///
/// Pattern elements are assigned to strictly increasing host elements while a
/// partial injective map pattern-block -> host-block is maintained. With
/// `anchor_last`, the last pattern element must land on the last host element;
/// this is the check needed when a prefix that already avoided the pattern is
/// extended by one element.
pub(crate) fn embeds(host: &[usize], pattern: &[usize], anchor_last: bool) -> bool {
    let (n, k) = (host.len(), pattern.len());
    if k > n {
        return false;
    }
    if k == 0 {
        return !anchor_last || n == 0;
    }
    let host_blocks = host.iter().max().map_or(0, |&m| m + 1);
    let pattern_blocks = pattern.iter().max().map_or(0, |&m| m + 1);
    let mut forward = vec![UNSET; pattern_blocks];
    let mut backward = vec![UNSET; host_blocks];
    let mut search = Embedding { host, pattern, anchor_last, forward: &mut forward, backward: &mut backward };
    search.run(0, 0)
}

struct Embedding<'a> {
    host: &'a [usize],
    pattern: &'a [usize],
    anchor_last: bool,
    forward: &'a mut [usize],
    backward: &'a mut [usize],
}

impl Embedding<'_> {
    fn run(&mut self, j: usize, start: usize) -> bool {
        let (n, k) = (self.host.len(), self.pattern.len());
        if j == k {
            return true;
        }
        let last_allowed = n - (k - j);
        let first = if self.anchor_last && j == k - 1 { n - 1 } else { start };
        if first < start {
            return false;
        }
        let pb = self.pattern[j];
        for h in first..=last_allowed {
            let hb = self.host[h];
            let mapped = self.forward[pb];
            if mapped != UNSET {
                if mapped == hb && self.run(j + 1, h + 1) {
                    return true;
                }
            } else if self.backward[hb] == UNSET {
                self.forward[pb] = hb;
                self.backward[hb] = pb;
                let found = self.run(j + 1, h + 1);
                self.forward[pb] = UNSET;
                self.backward[hb] = UNSET;
                if found {
                    return true;
                }
            }
        }
        false
    }
}

/// All set partitions of `[n]` in lexicographic order of their restricted
/// growth strings.
pub fn enumerate_partitions(n: usize, limits: &Limits) -> Result<PartitionIter> {
    if n > limits.max_partition_n {
        return Err(Error::ResourceLimit(format!(
            "enumerating partitions of [{n}] exceeds the limit {}",
            limits.max_partition_n
        )));
    }
    Ok(PartitionIter { rgs: vec![0; n], done: false })
}

#[derive(Clone, Debug)]
pub struct PartitionIter {
    rgs: Vec<usize>,
    done: bool,
}

impl Iterator for PartitionIter {
    type Item = SetPartition;

    fn next(&mut self) -> Option<SetPartition> {
        if self.done {
            return None;
        }
        let current = SetPartition::from_rgs_unchecked(self.rgs.clone());
        self.done = !advance_rgs(&mut self.rgs, 0);
        Some(current)
    }
}

/// Steps a restricted growth string to its lexicographic successor, leaving
/// the first `fixed` positions untouched. Returns `false` when no successor
/// with that prefix exists.
pub(crate) fn advance_rgs(rgs: &mut [usize], fixed: usize) -> bool {
    let n = rgs.len();
    let mut prefix_max = Vec::with_capacity(n);
    let mut m = 0;
    for &b in rgs.iter() {
        m = m.max(b);
        prefix_max.push(m);
    }
    for i in (fixed.max(1)..n).rev() {
        if rgs[i] <= prefix_max[i - 1] {
            rgs[i] += 1;
            rgs[i + 1..].iter_mut().for_each(|b| *b = 0);
            return true;
        }
    }
    false
}

/// All restricted growth strings of length `len`, in lexicographic order.
pub(crate) fn rgs_prefixes(len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut rgs = vec![0; len];
    loop {
        out.push(rgs.clone());
        if !advance_rgs(&mut rgs, 0) {
            return out;
        }
    }
}

/// Calls `visit` on every restricted growth string of length `n` that starts
/// with `prefix`.
pub(crate) fn for_each_completion(prefix: &[usize], n: usize, mut visit: impl FnMut(&[usize])) {
    let mut rgs = prefix.to_vec();
    rgs.resize(n, 0);
    loop {
        visit(&rgs);
        if !advance_rgs(&mut rgs, prefix.len()) {
            return;
        }
    }
}

/// Bell numbers via the Bell triangle.
pub fn bell(n: usize) -> BigUint {
    if n == 0 {
        return BigUint::one();
    }
    let mut row = vec![BigUint::one()];
    for _ in 1..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(row.last().cloned().unwrap_or_else(BigUint::zero));
        for x in &row {
            let v = next.last().unwrap() + x;
            next.push(v);
        }
        row = next;
    }
    row.pop().unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> SetPartition {
        s.parse().unwrap()
    }

    #[test]
    fn parses_non_standard_input() {
        let x = p("1635/24");
        assert_eq!(x.blocks(), &[vec![1, 3, 5, 6], vec![2, 4]]);
        assert_eq!(x.render(), "1356/24");
        assert_eq!(p("1").blocks(), &[vec![1]]);
        let ten = p("1,10/2,3,4,5,6,7,8,9");
        assert_eq!(ten.blocks(), &[vec![1, 10], (2..=9).collect::<Vec<_>>()]);
        assert_eq!(ten.render(), "1,10/2,3,4,5,6,7,8,9");
    }

    #[test]
    fn all_singletons_past_nine_round_trip() {
        let x = SetPartition::from_rgs((0..11).collect()).unwrap();
        assert_eq!(x.render(), "1/2/3/4/5/6/7/8/9/10/11");
        assert_eq!(p(&x.render()), x);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_partition("12//3"), Err(Error::MalformedText(_))));
        assert!(matches!(parse_partition("1a/2"), Err(Error::MalformedText(_))));
        assert!(matches!(parse_partition("1,,2"), Err(Error::MalformedText(_))));
        assert!(matches!(parse_partition("12/2"), Err(Error::NotAPartition(_))));
        assert_eq!(parse_partition("13").unwrap().render(), "13/2");
        assert_eq!(parse_partition("136/5/27").unwrap().render(), "136/27/4/5");
        assert!(matches!(parse_partition("10/2"), Err(Error::NotAPartition(_))));
    }

    #[test]
    fn standardize_examples() {
        assert_eq!(standardize(vec![vec![2, 4], vec![1, 6, 3, 5]]).unwrap().render(), "1356/24");
        assert_eq!(standardize(vec![vec![1], vec![2], vec![3]]).unwrap().render(), "1/2/3");
        assert_eq!(standardize(vec![vec![3], vec![1, 2]]).unwrap().render(), "12/3");
        assert!(standardize(vec![vec![1, 2], vec![2]]).is_err());
        assert!(matches!(standardize(vec![vec![1, 3]]), Err(Error::NotAPartition(_))));
    }

    #[test]
    fn restrict_examples() {
        let x = p("136/5/27");
        assert_eq!(x.restrict(&[2, 3, 6, 7]).unwrap(), p("14/23"));
        assert_eq!(x.restrict(&[1, 2, 3, 4, 5, 6, 7]).unwrap(), x);
        assert_eq!(p("1/2/3").restrict(&[1, 3]).unwrap(), p("1/2"));
        assert!(matches!(x.restrict(&[0]), Err(Error::OutOfRange { .. })));
        assert!(matches!(x.restrict(&[8]), Err(Error::OutOfRange { .. })));
        assert!(x.restrict(&[3, 2]).is_err());
    }

    #[test]
    fn containment_examples() {
        let x = p("136/5/27");
        assert!(x.contains(&p("14/23")));
        assert!(!x.contains(&p("1/234")));
        assert!(x.contains(&x));
        assert!(!p("12").contains(&p("123")));
        assert!(x.contains(&SetPartition::empty()));
    }

    #[test]
    fn anchored_embedding() {
        // 12/3 contains 1/2 only with 2 mapped to 3 or via (1,3)/(2,3).
        assert!(embeds(p("12/3").rgs(), p("1/2").rgs(), true));
        // 1/23 contains 12, but only at (2,3) which ends at 3.
        assert!(embeds(p("1/23").rgs(), p("12").rgs(), true));
        assert!(!embeds(p("12/3").rgs(), p("12").rgs(), true));
    }

    #[test]
    fn layered_examples() {
        assert!(p("12/3456/789").is_layered());
        assert!(!p("13/2456/789").is_layered());
        assert!(p("1").is_layered());
    }

    #[test]
    fn enumeration_small() {
        let limits = Limits::default();
        let three: Vec<String> =
            enumerate_partitions(3, &limits).unwrap().map(|x| x.render()).collect();
        assert_eq!(three, ["123", "12/3", "13/2", "1/23", "1/2/3"]);
        assert_eq!(enumerate_partitions(1, &limits).unwrap().count(), 1);
        let zero: Vec<_> = enumerate_partitions(0, &limits).unwrap().collect();
        assert_eq!(zero, vec![SetPartition::empty()]);
        assert!(matches!(enumerate_partitions(15, &limits), Err(Error::ResourceLimit(_))));
    }

    #[test]
    fn prefix_split_covers_everything_once() {
        let limits = Limits::default();
        let all: Vec<Vec<usize>> =
            enumerate_partitions(6, &limits).unwrap().map(|x| x.rgs().to_vec()).collect();
        let mut split = Vec::new();
        for prefix in rgs_prefixes(3) {
            for_each_completion(&prefix, 6, |r| split.push(r.to_vec()));
        }
        assert_eq!(split, all);
    }

    #[test]
    fn bell_values() {
        assert_eq!(bell(0), BigUint::from(1u32));
        assert_eq!(bell(3), BigUint::from(5u32));
        assert_eq!(bell(12), BigUint::from(4_213_597u32));
        let limits = Limits::default();
        for n in 0..=10 {
            assert_eq!(bell(n), BigUint::from(enumerate_partitions(n, &limits).unwrap().count()));
        }
    }

    #[test]
    fn without_singletons_drops_and_relabels() {
        assert_eq!(p("13/2/45").without_singletons(), p("12/34"));
        assert_eq!(p("1/2").without_singletons(), SetPartition::empty());
    }
}
