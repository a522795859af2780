//! Permutations of `[n]` in one-line notation.

use std::fmt;
use std::str::FromStr;

use crate::partition::parse_comma_list;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// Validates one-line notation `σ(1)…σ(n)` (1-based values).
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v == 0 || v > n {
                return Err(Error::NotAPermutation(format!("value {v} is outside 1..={n}")));
            }
            if std::mem::replace(&mut seen[v - 1], true) {
                return Err(Error::NotAPermutation(format!("value {v} repeats")));
            }
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        Permutation { images }
    }

    pub fn identity(n: usize) -> Self {
        Permutation { images: (1..=n).collect() }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `σ(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.n()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { images: inv }
    }

    /// Replaces each value `v` by `n + 1 - v`.
    pub fn complement(&self) -> Self {
        let n = self.n();
        Permutation { images: self.images.iter().map(|&v| n + 1 - v).collect() }
    }

    /// Positional inversions `(i, j)`, `i < j`, `σ(i) > σ(j)`, 1-based.
    pub fn inversions(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.images[i] > self.images[j] {
                    out.push((i + 1, j + 1));
                }
            }
        }
        out
    }

    /// Classical containment: some subsequence is order-isomorphic to `pattern`.
    pub fn contains(&self, pattern: &Permutation) -> bool {
        crate::tuples::parallel_embeds(&[self.images()], &[pattern.images()], false)
    }

    /// All permutations of `[n]` in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        let mut current = Some((1..=n).collect::<Vec<_>>());
        std::iter::from_fn(move || {
            let out = current.take()?;
            let mut next = out.clone();
            if next_lex(&mut next) {
                current = Some(next);
            }
            Some(Permutation { images: out })
        })
    }

    pub fn render(&self) -> String {
        let sep = if self.n() <= 9 { "" } else { "," };
        self.images.iter().map(usize::to_string).collect::<Vec<_>>().join(sep)
    }
}

fn next_lex(v: &mut [usize]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Digit run (`n <= 9`, e.g. `312`) or comma form (`3,1,2`).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(c) = s.chars().find(|c| !(c.is_ascii_digit() || *c == ',')) {
            return Err(Error::MalformedText(format!("unexpected character {c:?} in {s:?}")));
        }
        let images = if s.is_empty() {
            Vec::new()
        } else if s.contains(',') {
            parse_comma_list(s)?
        } else if s.len() <= 9 {
            s.bytes().map(|b| (b - b'0') as usize).collect()
        } else {
            return Err(Error::MalformedText(format!(
                "{s:?}: digit-run form is only valid for n <= 9"
            )));
        };
        Permutation::new(images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_render() {
        let s: Permutation = "312".parse().unwrap();
        assert_eq!(s.images(), &[3, 1, 2]);
        assert_eq!(s.to_string(), "312");
        let big: Permutation = "10,9,8,7,6,5,4,3,2,1".parse().unwrap();
        assert_eq!(big.n(), 10);
        assert_eq!(big.render().parse::<Permutation>().unwrap(), big);
        assert!("113".parse::<Permutation>().is_err());
        assert!("14".parse::<Permutation>().is_err());
        assert!("1x".parse::<Permutation>().is_err());
        assert!("12345678910".parse::<Permutation>().is_err());
    }

    #[test]
    fn complement_inverse() {
        let s: Permutation = "132".parse().unwrap();
        assert_eq!(s.complement().to_string(), "312");
        assert_eq!(s.complement().complement(), s);
        let t: Permutation = "231".parse().unwrap();
        assert_eq!(t.inverse().to_string(), "312");
        assert_eq!(t.inverse().inverse(), t);
    }

    #[test]
    fn lexicographic_listing() {
        let all: Vec<String> = Permutation::all(3).map(|p| p.to_string()).collect();
        assert_eq!(all, ["123", "132", "213", "231", "312", "321"]);
        assert_eq!(Permutation::all(0).count(), 1);
        assert_eq!(Permutation::all(5).count(), 120);
    }

    #[test]
    fn inversion_sets() {
        let a: Permutation = "132".parse().unwrap();
        let b: Permutation = "231".parse().unwrap();
        assert_eq!(a.inversions(), vec![(2, 3)]);
        assert_eq!(b.inversions(), vec![(1, 3), (2, 3)]);
    }
}
