//! Simple undirected graphs stored as per-vertex bit rows, vertex subsets,
//! and the neighborhood/degree functionals.
//!
//! Vertices are `0..n-1` and identity is positional. Graphs of any order can
//! be built and serialized; the exact-search operations elsewhere in the
//! crate require `n <= 64` (see [`EXACT_SEARCH_MAX_N`]) and fail with
//! `CapacityExceeded` beyond that.

use std::fmt;

use crate::error::{Error, Result};

/// Hard cap for all exact-search code paths (single-word adjacency masks).
pub const EXACT_SEARCH_MAX_N: usize = 64;

const W: usize = 64;

#[inline]
fn words_for(n: usize) -> usize {
    n.div_ceil(W)
}

/// A subset of the vertices of some host graph.
///
/// Stored as a bitset; equality and ordering are by the ascending element
/// sequence, independent of capacity.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct VertexSet {
    words: Vec<u64>,
}

impl VertexSet {
    pub fn new() -> Self {
        VertexSet { words: Vec::new() }
    }

    pub fn singleton(v: usize) -> Self {
        let mut s = VertexSet::new();
        s.insert(v);
        s
    }

    /// The full vertex set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        let mut words = vec![!0u64; words_for(n)];
        if !n.is_multiple_of(W) {
            if let Some(last) = words.last_mut() {
                *last = (1u64 << (n % W)) - 1;
            }
        }
        let mut s = VertexSet { words };
        s.normalize();
        s
    }

    pub fn insert(&mut self, v: usize) {
        let w = v / W;
        if w >= self.words.len() {
            self.words.resize(w + 1, 0);
        }
        self.words[w] |= 1u64 << (v % W);
    }

    pub fn remove(&mut self, v: usize) {
        let w = v / W;
        if w < self.words.len() {
            self.words[w] &= !(1u64 << (v % W));
            self.normalize();
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        let w = v / W;
        w < self.words.len() && self.words[w] >> (v % W) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Elements in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let base = i * W;
            BitIter(w).map(move |b| base + b)
        })
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut words = vec![0u64; self.words.len().max(other.words.len())];
        for (i, w) in words.iter_mut().enumerate() {
            *w = self.words.get(i).copied().unwrap_or(0) | other.words.get(i).copied().unwrap_or(0);
        }
        let mut s = VertexSet { words };
        s.normalize();
        s
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut words = vec![0u64; self.words.len().min(other.words.len())];
        for (i, w) in words.iter_mut().enumerate() {
            *w = self.words[i] & other.words[i];
        }
        let mut s = VertexSet { words };
        s.normalize();
        s
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut words = self.words.clone();
        for (i, w) in words.iter_mut().enumerate() {
            *w &= !other.words.get(i).copied().unwrap_or(0);
        }
        let mut s = VertexSet { words };
        s.normalize();
        s
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .enumerate()
            .all(|(i, &w)| w & !other.words.get(i).copied().unwrap_or(0) == 0)
    }

    pub fn max_element(&self) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate().rev() {
            if w != 0 {
                return Some(i * W + (63 - w.leading_zeros() as usize));
            }
        }
        None
    }

    /// Single-word mask, available only when all elements are below 64.
    pub fn to_mask64(&self) -> Option<u64> {
        match self.max_element() {
            Some(m) if m >= 64 => None,
            _ => Some(self.words.first().copied().unwrap_or(0)),
        }
    }

    pub fn from_mask64(mask: u64) -> VertexSet {
        let mut s = VertexSet { words: vec![mask] };
        s.normalize();
        s
    }

    fn normalize(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = VertexSet::new();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let b = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(b)
        }
    }
}

/// A natural number or the distinguished value arising when a minimization
/// ranges over an empty set (no independent set of the requested size).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DegreeValue {
    Finite(usize),
    Infinite,
}

impl DegreeValue {
    pub fn is_infinite(&self) -> bool {
        matches!(self, DegreeValue::Infinite)
    }

    pub fn at_least(&self, k: usize) -> bool {
        match self {
            DegreeValue::Finite(v) => *v >= k,
            DegreeValue::Infinite => true,
        }
    }

    pub fn finite(&self) -> Option<usize> {
        match self {
            DegreeValue::Finite(v) => Some(*v),
            DegreeValue::Infinite => None,
        }
    }
}

impl PartialOrd for DegreeValue {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for DegreeValue {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use DegreeValue::*;
        match (self, other) {
            (Finite(a), Finite(b)) => a.cmp(b),
            (Finite(_), Infinite) => std::cmp::Ordering::Less,
            (Infinite, Finite(_)) => std::cmp::Ordering::Greater,
            (Infinite, Infinite) => std::cmp::Ordering::Equal,
        }
    }
}

impl fmt::Display for DegreeValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DegreeValue::Finite(v) => write!(f, "{v}"),
            DegreeValue::Infinite => write!(f, "infinite"),
        }
    }
}

impl serde::Serialize for DegreeValue {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            DegreeValue::Finite(v) => ser.serialize_u64(*v as u64),
            DegreeValue::Infinite => ser.serialize_str("infinite"),
        }
    }
}

/// An immutable simple undirected graph. Adjacency is symmetric and
/// irreflexive; values are safe to share across threads once built.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    row_words: usize,
    bits: Vec<u64>,
}

impl Graph {
    pub fn empty(n: usize) -> Graph {
        let row_words = words_for(n);
        Graph { n, row_words, bits: vec![0; n * row_words] }
    }

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// The cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::InvalidOrder(format!("cycle requires n >= 3, got {n}")));
        }
        let mut g = Graph::empty(n);
        for u in 0..n {
            g.add_edge(u, (u + 1) % n);
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for u in 1..n {
            g.add_edge(u - 1, u);
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidOrder(format!("edge ({u},{v}) out of range for n={n}")));
            }
            if u == v {
                return Err(Error::InvalidOrder(format!("self-loop at {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Disjoint union: `other`'s vertices are relabeled to follow `self`'s.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::empty(self.n + other.n);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(self.n + u, self.n + v);
        }
        g
    }

    /// Join: disjoint union plus all edges between the two parts.
    pub fn join(&self, other: &Graph) -> Graph {
        let mut g = self.disjoint_union(other);
        for u in 0..self.n {
            for v in 0..other.n {
                g.add_edge(u, self.n + v);
            }
        }
        g
    }

    /// Induced subgraph on `s`, relabeled to `0..|s|-1` in ascending order of
    /// the original ids. Returns the graph and the new-to-original vertex map.
    pub fn induced(&self, s: &VertexSet) -> Result<(Graph, Vec<usize>)> {
        if !s.is_subset_of(&self.full_set()) {
            return Err(Error::PreconditionViolated("induced: set not within vertex range".into()));
        }
        let map: Vec<usize> = s.iter().collect();
        let mut g = Graph::empty(map.len());
        for (a, &u) in map.iter().enumerate() {
            for (b, &v) in map.iter().enumerate().skip(a + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(a, b);
                }
            }
        }
        Ok((g, map))
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u < self.n && v < self.n && u != v);
        self.bits[u * self.row_words + v / W] |= 1u64 << (v % W);
        self.bits[v * self.row_words + u / W] |= 1u64 << (u % W);
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        self.bits[u * self.row_words + v / W] >> (v % W) & 1 == 1
    }

    pub fn degree(&self, u: usize) -> usize {
        self.row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(u).iter().enumerate().flat_map(|(i, &w)| {
            let base = i * W;
            BitIter(w).map(move |b| base + b)
        })
    }

    pub fn neighborhood(&self, u: usize) -> VertexSet {
        let mut s = VertexSet { words: self.row(u).to_vec() };
        s.normalize();
        s
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).sum::<usize>() / 2
    }

    /// All edges as `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn full_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * self.n.saturating_sub(1) / 2
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for v in self.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == self.n
    }

    /// Single-word adjacency rows for the exact-search kernels.
    pub(crate) fn mask_rows(&self) -> Result<Vec<u64>> {
        if self.n > EXACT_SEARCH_MAX_N {
            return Err(Error::CapacityExceeded(format!(
                "exact search supports n <= {EXACT_SEARCH_MAX_N}, got {}",
                self.n
            )));
        }
        Ok((0..self.n).map(|u| self.row(u).first().copied().unwrap_or(0)).collect())
    }

    #[inline]
    fn row(&self, u: usize) -> &[u64] {
        &self.bits[u * self.row_words..(u + 1) * self.row_words]
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n, self.edge_count())
    }
}

/// `N_G(S)`: all vertices adjacent to at least one member of `s`. Members of
/// `s` appear in the result when adjacent to another member.
pub fn neighborhood_union(g: &Graph, s: &VertexSet) -> Result<VertexSet> {
    if !s.is_subset_of(&g.full_set()) {
        return Err(Error::PreconditionViolated("neighborhood_union: set not within vertex range".into()));
    }
    let mut acc = VertexSet::new();
    for v in s.iter() {
        acc = acc.union(&g.neighborhood(v));
    }
    Ok(acc)
}

/// `|N_G(S) ∩ H|`: the neighborhood-union size restricted to `h`.
///
/// For a pair `S = {u, v}` this is the union size, never `deg(u) + deg(v)`;
/// the API intentionally has no degree-sum counterpart.
pub fn restricted_degree(g: &Graph, h: &VertexSet, s: &VertexSet) -> Result<usize> {
    if s.is_empty() {
        return Err(Error::EmptyQuerySet);
    }
    if !s.is_subset_of(&g.full_set()) || !h.is_subset_of(&g.full_set()) {
        return Err(Error::PreconditionViolated("restricted_degree: set not within vertex range".into()));
    }
    Ok(neighborhood_union(g, s)?.intersection(h).len())
}

/// `δ_m(G)`: minimum of `|N_G(S)|` over independent sets `S` of size `m`;
/// `Infinite` when no such set exists (e.g. `δ₂` of a complete graph).
pub fn delta_m(g: &Graph, m: usize) -> Result<DegreeValue> {
    if m == 0 {
        return Err(Error::PreconditionViolated("delta_m requires m >= 1".into()));
    }
    let mut best: Option<usize> = None;
    fold_independent_sets(g, m, &mut |set| {
        let size = neighborhood_union(g, &set.iter().copied().collect())
            .expect("members in range")
            .len();
        best = Some(best.map_or(size, |b| b.min(size)));
    });
    Ok(best.map_or(DegreeValue::Infinite, DegreeValue::Finite))
}

/// `σ_m(G)`: minimum degree sum over independent sets of size `m`.
pub fn sigma_m(g: &Graph, m: usize) -> Result<DegreeValue> {
    if m == 0 {
        return Err(Error::PreconditionViolated("sigma_m requires m >= 1".into()));
    }
    let mut best: Option<usize> = None;
    fold_independent_sets(g, m, &mut |set| {
        let sum = set.iter().map(|&v| g.degree(v)).sum();
        best = Some(best.map_or(sum, |b| b.min(sum)));
    });
    Ok(best.map_or(DegreeValue::Infinite, DegreeValue::Finite))
}

/// Calls `f` once per independent set of size exactly `m` (as an ascending
/// slice of vertices).
fn fold_independent_sets(g: &Graph, m: usize, f: &mut impl FnMut(&[usize])) {
    let mut chosen = Vec::with_capacity(m);
    rec(g, m, 0, &mut chosen, f);

    fn rec(g: &Graph, m: usize, start: usize, chosen: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if chosen.len() == m {
            f(chosen);
            return;
        }
        let needed = m - chosen.len();
        if g.n() < start + needed {
            return;
        }
        'cand: for v in start..g.n() {
            if g.n() - v < needed {
                break;
            }
            for &c in chosen.iter() {
                if g.has_edge(c, v) {
                    continue 'cand;
                }
            }
            chosen.push(v);
            rec(g, m, v + 1, chosen, f);
            chosen.pop();
        }
    }
}
