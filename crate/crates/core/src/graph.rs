//! Simple undirected graphs on the vertex set `{1..n}`.
//!
//! A labeled graph is always a [`Graph`] whose identity labeling is the one
//! under study; [`relabel`] turns any other labeling into that form.

use std::collections::VecDeque;
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{Error, Result};

/// Simple undirected graph on `{1..n}` stored as one adjacency bitset per vertex.
///
/// Row 0 and bit 0 are unused so vertices index directly.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<FixedBitSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![FixedBitSet::with_capacity(n + 1); n + 1],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::Domain(format!("self-loop at vertex {u}")));
            }
            g.insert_edge(u, v);
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 1..=n {
            for v in u + 1..=n {
                g.insert_edge(u, v);
            }
        }
        g
    }

    /// The path `1 - 2 - ... - n`.
    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 1..n {
            g.insert_edge(u, u + 1);
        }
        g
    }

    /// Star `K_{1,k}` with center 1 and leaves `2..=k+1`.
    pub fn star(k: usize) -> Self {
        let mut g = Graph::empty(k + 1);
        for v in 2..=k + 1 {
            g.insert_edge(1, v);
        }
        g
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u >= 1 && v >= 1 && u <= self.n && v <= self.n);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|row| row.count_ones(..)).sum::<usize>() / 2
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u <= self.n && self.adj[u].contains(v)
    }

    /// Neighbor bitset of `v` (bit `w` set iff `{v,w}` is an edge).
    #[inline]
    pub fn adjacency(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].ones()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 1..=self.n {
            for v in self.adj[u].ones().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    /// Component index of every vertex (slot 0 unused), numbered by smallest member.
    pub fn components(&self) -> Vec<usize> {
        let mut comp = vec![usize::MAX; self.n + 1];
        let mut next = 0;
        for s in 1..=self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = next;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for w in self.adj[u].ones() {
                    if comp[w] == usize::MAX {
                        comp[w] = next;
                        stack.push(w);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    /// Connected with at least one vertex.
    pub fn is_connected(&self) -> bool {
        self.n >= 1 && bfs_distances(self, 1).iter().all(Option::is_some)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Sorted set of vertices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    /// The interval `[lo, hi]`; empty when `lo > hi`.
    pub fn interval(lo: usize, hi: usize) -> Self {
        VertexSet((lo..=hi).collect())
    }

    pub fn from_bits(bits: &FixedBitSet) -> Self {
        VertexSet(bits.ones().collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn min_vertex(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn max_vertex(&self) -> Option<usize> {
        self.0.last().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn is_interval(&self) -> bool {
        is_interval(self)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut v: Vec<usize> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl<const K: usize> From<[usize; K]> for VertexSet {
    fn from(a: [usize; K]) -> Self {
        a.into_iter().collect()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

/// A bijection from vertices to labels; `perm[v - 1]` is the label of `v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Labeling(Vec<usize>);

impl Labeling {
    pub fn new(perm: Vec<usize>) -> Result<Self> {
        let n = perm.len();
        let mut seen = vec![false; n + 1];
        for &l in &perm {
            if l == 0 || l > n {
                return Err(Error::InvalidLabeling(format!("label {l} outside 1..={n}")));
            }
            if std::mem::replace(&mut seen[l], true) {
                return Err(Error::InvalidLabeling(format!("label {l} used twice")));
            }
        }
        Ok(Labeling(perm))
    }

    pub(crate) fn from_vec_unchecked(perm: Vec<usize>) -> Self {
        debug_assert!(Labeling::new(perm.clone()).is_ok());
        Labeling(perm)
    }

    pub fn identity(n: usize) -> Self {
        Labeling((1..=n).collect())
    }

    /// Exchanges the labels of vertices `i` and `j` in the identity labeling.
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut p: Vec<usize> = (1..=n).collect();
        p.swap(i - 1, j - 1);
        Labeling(p)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn label_of(&self, v: usize) -> usize {
        self.0[v - 1]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (i, &l) in self.0.iter().enumerate() {
            inv[l - 1] = i + 1;
        }
        Labeling(inv)
    }

    /// `v -> n + 1 - label(v)`.
    pub fn reversal(&self) -> Self {
        let n = self.0.len();
        Labeling(self.0.iter().map(|&l| n + 1 - l).collect())
    }

    /// Apply `self` first, then `then`.
    pub fn then(&self, then: &Labeling) -> Self {
        Labeling(self.0.iter().map(|&l| then.label_of(l)).collect())
    }
}

impl fmt::Display for Labeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("]")
    }
}

/// The graph on `{1..n}` with an edge `{lab(u), lab(v)}` for every edge `{u, v}` of `g`.
pub fn relabel(g: &Graph, lab: &Labeling) -> Result<Graph> {
    if lab.len() != g.n() {
        return Err(Error::InvalidLabeling(format!(
            "labeling has length {} but graph has {} vertices",
            lab.len(),
            g.n()
        )));
    }
    let mut out = Graph::empty(g.n());
    for u in 1..=g.n() {
        let lu = lab.label_of(u);
        for v in g.neighbors(u) {
            out.adj[lu].insert(lab.label_of(v));
        }
    }
    Ok(out)
}

/// `N^>(i)`: neighbors of `i` with larger labels.
pub fn upper_neighborhood(g: &Graph, i: usize) -> Result<VertexSet> {
    g.check_vertex(i)?;
    Ok(g.neighbors(i).filter(|&j| j > i).collect())
}

/// `N^<(i)`: neighbors of `i` with smaller labels.
pub fn lower_neighborhood(g: &Graph, i: usize) -> Result<VertexSet> {
    g.check_vertex(i)?;
    Ok(g.neighbors(i).filter(|&j| j < i).collect())
}

/// True iff `s` is empty or equals `[min(s), max(s)]`.
pub fn is_interval(s: &VertexSet) -> bool {
    match (s.min_vertex(), s.max_vertex()) {
        (Some(lo), Some(hi)) => hi - lo + 1 == s.len(),
        _ => true,
    }
}

pub fn is_complete_on(g: &Graph, s: &VertexSet) -> bool {
    let m = s.as_slice();
    m.iter()
        .enumerate()
        .all(|(k, &u)| m[k + 1..].iter().all(|&v| g.has_edge(u, v)))
}

pub(crate) fn bits_complete(g: &Graph, s: &FixedBitSet) -> bool {
    let mut rest = s.clone();
    for u in s.ones() {
        rest.set(u, false);
        if !rest.is_subset(g.adjacency(u)) {
            return false;
        }
    }
    true
}

/// Shortest-path distances from `src`; entry `v - 1` is `None` when `v` is unreachable.
pub fn bfs_distances(g: &Graph, src: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.n()];
    if src == 0 || src > g.n() {
        return dist;
    }
    dist[src - 1] = Some(0);
    let mut queue = VecDeque::from([src]);
    while let Some(u) = queue.pop_front() {
        let du = dist[u - 1].unwrap();
        for w in g.neighbors(u) {
            if dist[w - 1].is_none() {
                dist[w - 1] = Some(du + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

pub fn diameter(g: &Graph) -> Result<usize> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let mut best = 0;
    for s in 1..=g.n() {
        for d in bfs_distances(g, s) {
            best = best.max(d.expect("connected"));
        }
    }
    Ok(best)
}

/// Every graph on `{1..n}`, indexed by a bitmask over the pairs `u < v` in
/// lexicographic order (bit 0 is `{1,2}`).
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    assert!(n <= 11, "exhaustive graph generation is limited to n <= 11");
    let pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
        .collect();
    let total: u64 = 1 << pairs.len();
    (0..total).map(move |mask| graph_from_mask(n, &pairs, mask))
}

fn graph_from_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> Graph {
    let mut g = Graph::empty(n);
    for (bit, &(u, v)) in pairs.iter().enumerate() {
        if mask >> bit & 1 == 1 {
            g.insert_edge(u, v);
        }
    }
    g
}
