//! Ordered hypergraphs on `[n]` and their pattern containment.
//!
//! `G` contains `H` when there is an order-preserving injection
//! `V(H) -> V(G)` and an injection `E(H) -> E(G)` such that every vertex of an
//! `H`-edge lands inside the image edge. The image edge may be larger.
//!
//! Text format: edges separated by `;`, vertices by `,` (`1,4;2,5,6;3`).
//! The vertex count is the largest vertex unless an `@n` suffix is present
//! (`1,2@5`).

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::partition::{parse_comma_list, SetPartition};
use crate::permutation::Permutation;
use crate::{Error, Limits, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderedHypergraph {
    n: usize,
    // Canonical: each edge strictly increasing, edges sorted and distinct.
    edges: Vec<Vec<usize>>,
}

impl OrderedHypergraph {
    /// Rejects empty edges, vertices outside `[n]` and repeated edges.
    pub fn new(n: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        let mut edges = normalize_edges(n, edges)?;
        let before = edges.len();
        edges.dedup();
        if edges.len() != before {
            return Err(Error::BadParameter("repeated edge".into()));
        }
        Ok(OrderedHypergraph { n, edges })
    }

    /// Like [`OrderedHypergraph::new`] but collapses repeated edges.
    pub fn from_edges_dedup(n: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        let mut edges = normalize_edges(n, edges)?;
        edges.dedup();
        Ok(OrderedHypergraph { n, edges })
    }

    pub fn empty(n: usize) -> Self {
        OrderedHypergraph { n, edges: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    /// `e(G)`.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// `i(G)`, the sum of edge sizes.
    pub fn weight(&self) -> usize {
        self.edges.iter().map(Vec::len).sum()
    }

    /// Common edge size, or `None` when sizes differ or there are no edges.
    pub fn uniformity(&self) -> Option<usize> {
        let t = self.edges.first()?.len();
        self.edges.iter().all(|e| e.len() == t).then_some(t)
    }

    pub fn contains(&self, pattern: &OrderedHypergraph) -> bool {
        embeds(self.n, &self.edges, pattern)
    }

    pub fn render(&self) -> String {
        let body = self
            .edges
            .iter()
            .map(|e| e.iter().map(usize::to_string).collect::<Vec<_>>().join(","))
            .collect::<Vec<_>>()
            .join(";");
        let max = self.edges.iter().filter_map(|e| e.last()).max().copied().unwrap_or(0);
        if max == self.n {
            body
        } else {
            format!("{body}@{}", self.n)
        }
    }
}

fn normalize_edges(n: usize, edges: Vec<Vec<usize>>) -> Result<Vec<Vec<usize>>> {
    let mut out = Vec::with_capacity(edges.len());
    for mut e in edges {
        if e.is_empty() {
            return Err(Error::BadParameter("empty edge".into()));
        }
        e.sort_unstable();
        if e.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::BadParameter(format!("edge {e:?} repeats a vertex")));
        }
        if let Some(&v) = e.iter().find(|&&v| v == 0 || v > n) {
            return Err(Error::OutOfRange { element: v, n });
        }
        out.push(e);
    }
    out.sort();
    Ok(out)
}

impl fmt::Display for OrderedHypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl FromStr for OrderedHypergraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (body, explicit) = match s.split_once('@') {
            Some((body, n)) => {
                let n = n
                    .parse::<usize>()
                    .map_err(|e| Error::MalformedText(format!("vertex count {n:?}: {e}")))?;
                (body, Some(n))
            }
            None => (s, None),
        };
        if let Some(c) = body.chars().find(|c| !(c.is_ascii_digit() || *c == ',' || *c == ';')) {
            return Err(Error::MalformedText(format!("unexpected character {c:?} in {s:?}")));
        }
        let edges = if body.is_empty() {
            Vec::new()
        } else {
            body.split(';')
                .map(|tok| {
                    if tok.is_empty() {
                        Err(Error::MalformedText(format!("empty edge in {s:?}")))
                    } else {
                        parse_comma_list(tok)
                    }
                })
                .collect::<Result<Vec<_>>>()?
        };
        let max = edges.iter().flatten().max().copied().unwrap_or(0);
        let n = match explicit {
            Some(n) if n < max => {
                return Err(Error::MalformedText(format!("vertex {max} exceeds @{n}")));
            }
            Some(n) => n,
            None => max,
        };
        OrderedHypergraph::new(n, edges)
    }
}

/// Vertex subsets as bit words.
#[derive(Clone, Debug)]
struct VertexSet(Vec<u64>);

impl VertexSet {
    fn with_capacity(n: usize) -> Self {
        VertexSet(vec![0; n / 64 + 1])
    }

    fn from_vertices(n: usize, vertices: &[usize]) -> Self {
        let mut s = Self::with_capacity(n);
        vertices.iter().for_each(|&v| s.insert(v));
        s
    }

    fn insert(&mut self, v: usize) {
        self.0[v / 64] |= 1 << (v % 64);
    }

    fn remove(&mut self, v: usize) {
        self.0[v / 64] &= !(1 << (v % 64));
    }

    fn is_subset(&self, other: &VertexSet) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }
}

fn embeds(g_n: usize, g_edges: &[Vec<usize>], h: &OrderedHypergraph) -> bool {
    if h.n > g_n || h.edges.len() > g_edges.len() {
        return false;
    }
    if h.edges.is_empty() {
        return true;
    }
    let g_sets: Vec<VertexSet> = g_edges.iter().map(|e| VertexSet::from_vertices(g_n, e)).collect();
    let mut incident = vec![Vec::new(); h.n + 1];
    for (ei, e) in h.edges.iter().enumerate() {
        for &v in e {
            incident[v].push(ei);
        }
    }
    let mut search = HyperEmbedding {
        g_n,
        h,
        g_sets: &g_sets,
        incident: &incident,
        images: vec![VertexSet::with_capacity(g_n); h.edges.len()],
    };
    search.assign(1, 1)
}

struct HyperEmbedding<'a> {
    g_n: usize,
    h: &'a OrderedHypergraph,
    g_sets: &'a [VertexSet],
    incident: &'a [Vec<usize>],
    // Image of the already assigned part of each H-edge.
    images: Vec<VertexSet>,
}

impl HyperEmbedding<'_> {
    fn assign(&mut self, v: usize, start: usize) -> bool {
        if v > self.h.n {
            return self.edges_match();
        }
        let last = self.g_n - (self.h.n - v);
        if self.incident[v].is_empty() {
            // An isolated vertex is best placed as early as possible.
            return start <= last && self.assign(v + 1, start + 1);
        }
        for w in start..=last {
            for &ei in &self.incident[v] {
                self.images[ei].insert(w);
            }
            let feasible = self.incident[v]
                .iter()
                .all(|&ei| self.g_sets.iter().any(|g| self.images[ei].is_subset(g)));
            if feasible && self.assign(v + 1, w + 1) {
                return true;
            }
            for &ei in &self.incident[v] {
                self.images[ei].remove(w);
            }
        }
        false
    }

    // Kuhn's augmenting paths: H-edges -> distinct G-edges containing their image.
    fn edges_match(&self) -> bool {
        let candidates: Vec<Vec<usize>> = self
            .images
            .iter()
            .map(|img| (0..self.g_sets.len()).filter(|&g| img.is_subset(&self.g_sets[g])).collect())
            .collect();
        let mut owner = vec![usize::MAX; self.g_sets.len()];
        (0..candidates.len()).all(|he| {
            let mut visited = vec![false; self.g_sets.len()];
            augment(he, &candidates, &mut owner, &mut visited)
        })
    }
}

fn augment(he: usize, candidates: &[Vec<usize>], owner: &mut [usize], visited: &mut [bool]) -> bool {
    for &g in &candidates[he] {
        if !visited[g] {
            visited[g] = true;
            if owner[g] == usize::MAX || augment(owner[g], candidates, owner, visited) {
                owner[g] = he;
                return true;
            }
        }
    }
    false
}

pub fn weight(g: &OrderedHypergraph) -> usize {
    g.weight()
}

pub fn contains_hypergraph(g: &OrderedHypergraph, h: &OrderedHypergraph) -> bool {
    g.contains(h)
}

/// Deletes the `J`-indexed positions (1-based, within each sorted edge) of a
/// `t`-uniform hypergraph, collapsing repeated edges.
pub fn project(g: &OrderedHypergraph, drop: &[usize]) -> Result<OrderedHypergraph> {
    if g.edges.is_empty() {
        return Ok(g.clone());
    }
    let t = g.uniformity().ok_or(Error::NotUniform)?;
    let mut sorted = drop.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::BadIndexSet(format!("{drop:?} repeats an index")));
    }
    if let Some(&i) = sorted.iter().find(|&&i| i == 0 || i > t) {
        return Err(Error::BadIndexSet(format!("index {i} is outside 1..={t}")));
    }
    if sorted.len() >= t {
        return Err(Error::BadIndexSet(format!("dropping {} of {t} positions", sorted.len())));
    }
    let edges = g
        .edges
        .iter()
        .map(|e| {
            e.iter()
                .enumerate()
                .filter(|(i, _)| !sorted.contains(&(i + 1)))
                .map(|(_, &v)| v)
                .collect()
        })
        .collect();
    OrderedHypergraph::from_edges_dedup(g.n, edges)
}

/// Shape of a `d`-permutation hypergraph: `k` edges of size `d` on `[kd]`,
/// one vertex in each consecutive length-`k` segment.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PermHypergraphSpec {
    pub d: usize,
    pub k: usize,
}

impl PermHypergraphSpec {
    /// Checks that `g` has this shape.
    pub fn admits(&self, g: &OrderedHypergraph) -> bool {
        let PermHypergraphSpec { d, k } = *self;
        if g.n != d * k || g.edges.len() != k {
            return false;
        }
        let mut covered = vec![false; g.n + 1];
        g.edges.iter().all(|e| {
            e.len() == d
                && e.iter().enumerate().all(|(seg, &v)| {
                    (seg * k < v && v <= (seg + 1) * k) && !std::mem::replace(&mut covered[v], true)
                })
        })
    }
}

/// Every `d`-permutation hypergraph with `k` edges, `(k!)^(d-1)` in total.
pub fn enumerate_perm_hypergraphs(
    spec: PermHypergraphSpec,
    limits: &Limits,
) -> Result<impl Iterator<Item = OrderedHypergraph>> {
    let PermHypergraphSpec { d, k } = spec;
    if d == 0 || k == 0 {
        return Err(Error::BadParameter("d and k must be positive".into()));
    }
    if d * k > limits.max_perm_hypergraph_vertices {
        return Err(Error::ResourceLimit(format!(
            "{d}-permutation hypergraphs on {} vertices exceed the limit {}",
            d * k,
            limits.max_perm_hypergraph_vertices
        )));
    }
    let perms: Vec<Permutation> = if d > 1 { Permutation::all(k).collect() } else { Vec::new() };
    let mut odometer = Some(vec![0usize; d - 1]);
    Ok(std::iter::from_fn(move || {
        let digits = odometer.take()?;
        let edges = (1..=k)
            .map(|i| {
                let mut e = vec![i];
                e.extend(digits.iter().enumerate().map(|(j, &p)| (j + 1) * k + perms[p].apply(i)));
                e
            })
            .collect();
        let mut next = digits;
        if let Some(pos) = next.iter().rposition(|&x| x + 1 < perms.len()) {
            next[pos] += 1;
            next[pos + 1..].iter_mut().for_each(|x| *x = 0);
            odometer = Some(next);
        }
        Some(OrderedHypergraph { n: d * k, edges: sorted(edges) })
    }))
}

fn sorted(mut edges: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    edges.sort();
    edges
}

/// The 1-regular hypergraph whose edges are the blocks of `partition`.
pub fn partition_to_hypergraph(partition: &SetPartition) -> OrderedHypergraph {
    OrderedHypergraph { n: partition.n(), edges: sorted(partition.blocks().to_vec()) }
}

// Interval (1-based) holding vertex `v` when [n] is cut into `s` intervals,
// the first n mod s of which are one longer.
fn interval_of(v: usize, n: usize, s: usize) -> usize {
    let (q, r) = (n / s, n % s);
    let long = r * (q + 1);
    if v - 1 < long {
        (v - 1) / (q + 1) + 1
    } else {
        r + (v - 1 - long) / q + 1
    }
}

fn contracted_edges(g: &OrderedHypergraph, s: usize) -> Result<Vec<Vec<usize>>> {
    if s == 0 || s > g.n {
        return Err(Error::BadParameter(format!("need 1 <= s <= {}, got {s}", g.n)));
    }
    Ok(g.edges
        .iter()
        .map(|e| {
            let mut c: Vec<usize> = e.iter().map(|&v| interval_of(v, g.n, s)).collect();
            c.dedup();
            c
        })
        .collect())
}

/// Quotient of `g` by `s` consecutive intervals, repeated edges removed.
pub fn interval_contract(g: &OrderedHypergraph, s: usize) -> Result<OrderedHypergraph> {
    OrderedHypergraph::from_edges_dedup(s, contracted_edges(g, s)?)
}

/// The contraction before deduplication: contracted edge -> multiplicity.
pub fn interval_contract_multiplicity(
    g: &OrderedHypergraph,
    s: usize,
) -> Result<BTreeMap<Vec<usize>, usize>> {
    let mut out = BTreeMap::new();
    for e in contracted_edges(g, s)? {
        *out.entry(e).or_insert(0) += 1;
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtremalResult {
    #[serde(serialize_with = "serialize_display")]
    pub best: OrderedHypergraph,
    pub weight: usize,
    /// The search tree was exhausted within budget.
    pub exact: bool,
    pub nodes: u64,
}

fn serialize_display<S: serde::Serializer>(g: &OrderedHypergraph, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(g)
}

/// Largest-weight hypergraph on `[n]` avoiding `h`, by branch and bound.
///
/// Candidate edges are all nonempty subsets of `[n]` (or only the `t`-subsets
/// when `uniform = Some(t)`), largest first and lexicographic within a size.
/// A greedy pass seeds the incumbent; branches whose weight plus all remaining
/// candidate sizes cannot beat it are cut. `exact` is `false` when more than
/// `budget` nodes would be needed.
pub fn max_weight_avoiding(
    h: &OrderedHypergraph,
    n: usize,
    budget: u64,
    uniform: Option<usize>,
    limits: &Limits,
) -> Result<ExtremalResult> {
    if n > limits.max_extremal_n {
        return Err(Error::ResourceLimit(format!(
            "extremal search on {n} vertices exceeds the limit {}",
            limits.max_extremal_n
        )));
    }
    if budget == 0 {
        return Err(Error::BadParameter("budget must be at least 1".into()));
    }
    if let Some(t) = uniform {
        if t == 0 || t > n {
            return Err(Error::BadParameter(format!("uniformity {t} outside 1..={n}")));
        }
    }
    let mut candidates: Vec<Vec<usize>> = (1u64..1 << n)
        .map(|mask| (1..=n).filter(|&v| mask & (1 << (v - 1)) != 0).collect::<Vec<_>>())
        .filter(|e| uniform.is_none_or(|t| e.len() == t))
        .collect();
    candidates.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));

    let mut greedy = Vec::new();
    for c in &candidates {
        greedy.push(c.clone());
        if embeds(n, &greedy, h) {
            greedy.pop();
        }
    }
    let mut remaining = vec![0; candidates.len() + 1];
    for i in (0..candidates.len()).rev() {
        remaining[i] = remaining[i + 1] + candidates[i].len();
    }
    let mut search = BranchAndBound {
        n,
        h,
        candidates: &candidates,
        remaining: &remaining,
        budget,
        nodes: 0,
        aborted: false,
        current: Vec::new(),
        best_weight: greedy.iter().map(Vec::len).sum(),
        best: greedy,
    };
    search.explore(0, 0);
    let best = OrderedHypergraph::new(n, search.best)?;
    if best.contains(h) {
        return Err(Error::CertificateFailed(format!("search returned {best}, which contains {h}")));
    }
    Ok(ExtremalResult { weight: best.weight(), best, exact: !search.aborted, nodes: search.nodes })
}

struct BranchAndBound<'a> {
    n: usize,
    h: &'a OrderedHypergraph,
    candidates: &'a [Vec<usize>],
    remaining: &'a [usize],
    budget: u64,
    nodes: u64,
    aborted: bool,
    current: Vec<Vec<usize>>,
    best: Vec<Vec<usize>>,
    best_weight: usize,
}

impl BranchAndBound<'_> {
    fn explore(&mut self, index: usize, weight: usize) {
        if self.aborted {
            return;
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            self.aborted = true;
            return;
        }
        if weight > self.best_weight {
            self.best_weight = weight;
            self.best = self.current.clone();
        }
        if index == self.candidates.len() || weight + self.remaining[index] <= self.best_weight {
            return;
        }
        let edge = &self.candidates[index];
        self.current.push(edge.clone());
        if !embeds(self.n, &self.current, self.h) {
            self.explore(index + 1, weight + edge.len());
        }
        self.current.pop();
        self.explore(index + 1, weight);
    }
}
