//! Connected graphs whose identity labeling is closed, organized by layer sizes.
//!
//! A composition `(1, a_1, ..., a_h)` of `n` fixes the layers as consecutive
//! blocks of labels. Such a graph is determined by one weakly increasing
//! sequence per non-top layer recording how many vertices of the next layer
//! each vertex reaches.

use std::fmt;
use std::ops::RangeInclusive;

use num_bigint::BigUint;
use num_integer::binomial;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::closedness::{first_violation, is_closed_by_definition, layer_decomposition};
use crate::error::{Error, Result};
use crate::graph::{all_graphs, Graph, VertexSet};

/// Layer sizes `(a_0, a_1, ..., a_h)` with `a_0 = 1` and every `a_N >= 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct LayerPartition(Vec<usize>);

impl LayerPartition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        match parts.first() {
            None => return Err(Error::InvalidPartition("no parts".into())),
            Some(&a0) if a0 != 1 => {
                return Err(Error::InvalidPartition(format!("a_0 must be 1, got {a0}")))
            }
            _ => {}
        }
        if let Some(k) = parts.iter().position(|&a| a == 0) {
            return Err(Error::InvalidPartition(format!("part a_{k} is zero")));
        }
        Ok(LayerPartition(parts))
    }

    /// Parses `"1,2,1"` or `"2,1"`; a missing leading `1` is implied.
    /// A leading `1` is always read as `a_0`.
    pub fn parse(s: &str) -> Result<Self> {
        let mut parts = Vec::new();
        for tok in s.split(',') {
            let tok = tok.trim();
            let a: usize = tok
                .parse()
                .map_err(|_| Error::InvalidPartition(format!("'{tok}' is not a nonnegative integer")))?;
            parts.push(a);
        }
        if parts.first() != Some(&1) {
            parts.insert(0, 1);
        }
        LayerPartition::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn h(&self) -> usize {
        self.0.len() - 1
    }

    pub fn n(&self) -> usize {
        self.0.iter().sum()
    }

    /// `m_N`, the smallest label in layer `N`.
    pub fn min_of(&self, layer: usize) -> usize {
        self.0[..layer].iter().sum::<usize>() + 1
    }

    /// The labels of layer `N`.
    pub fn block(&self, layer: usize) -> RangeInclusive<usize> {
        let lo = self.min_of(layer);
        lo..=lo + self.0[layer] - 1
    }

    /// Every composition `(1, a_1, ..., a_h)` of `n`, lexicographic in `(a_1, ..., a_h)`.
    pub fn all(n: usize) -> Result<Vec<LayerPartition>> {
        if n == 0 {
            return Err(Error::Domain("n must be positive".into()));
        }
        fn rec(rest: usize, cur: &mut Vec<usize>, out: &mut Vec<LayerPartition>) {
            if rest == 0 {
                out.push(LayerPartition(cur.clone()));
                return;
            }
            for a in 1..=rest {
                cur.push(a);
                rec(rest - a, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n - 1, &mut vec![1], &mut out);
        Ok(out)
    }
}

impl fmt::Display for LayerPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

/// One sequence `S_N = (b_1, ..., b_{a_N})` per layer `N < h`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct SequenceFamily(Vec<Vec<usize>>);

impl SequenceFamily {
    /// Checks lengths, monotonicity and the final entries against `p`.
    pub fn new(p: &LayerPartition, seqs: Vec<Vec<usize>>) -> Result<Self> {
        if seqs.len() != p.h() {
            return Err(Error::InvalidSequence(format!(
                "expected {} sequences, got {}",
                p.h(),
                seqs.len()
            )));
        }
        let a = p.parts();
        for (k, s) in seqs.iter().enumerate() {
            if s.len() != a[k] {
                return Err(Error::InvalidSequence(format!(
                    "S_{k} has length {} but layer {k} has {} vertices",
                    s.len(),
                    a[k]
                )));
            }
            if s.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::InvalidSequence(format!("S_{k} is not weakly increasing")));
            }
            if s.last() != Some(&a[k + 1]) {
                return Err(Error::InvalidSequence(format!(
                    "S_{k} must end at a_{} = {}",
                    k + 1,
                    a[k + 1]
                )));
            }
        }
        Ok(SequenceFamily(seqs))
    }

    pub fn seqs(&self) -> &[Vec<usize>] {
        &self.0
    }
}

/// Layer sizes and sequences of a connected graph whose identity labeling is closed.
pub fn sequences_of(g: &Graph) -> Result<(LayerPartition, SequenceFamily)> {
    if !g.is_connected() {
        return Err(Error::Precondition("graph must be connected".into()));
    }
    if let Some(v) = first_violation(g) {
        return Err(Error::Precondition(format!(
            "identity labeling is not closed; violating triple {v}"
        )));
    }
    let ld = layer_decomposition(g)?;
    let p = LayerPartition::new(ld.sizes())?;
    for (k, layer) in ld.layers().iter().enumerate() {
        if layer.iter().ne(p.block(k)) {
            return Err(Error::Precondition(format!(
                "layer {k} is {layer}, not a block of consecutive labels"
            )));
        }
    }
    let seqs = (0..p.h())
        .map(|k| {
            let next = p.block(k + 1);
            p.block(k)
                .map(|u| g.neighbors(u).filter(|v| next.contains(v)).count())
                .collect()
        })
        .collect();
    let f = SequenceFamily::new(&p, seqs)?;
    Ok((p, f))
}

/// Builds the graph with a clique on every layer and, for the `s`-th vertex
/// `u_s` of layer `N`, edges to `[m_{N+1}, m_{N+1} + b_s - 1]`.
pub fn graph_from_sequences(p: &LayerPartition, f: &SequenceFamily) -> Result<Graph> {
    let f = SequenceFamily::new(p, f.0.clone())?;
    let mut g = Graph::empty(p.n());
    for k in 0..=p.h() {
        let block = p.block(k);
        for u in block.clone() {
            for v in u + 1..=*block.end() {
                g.insert_edge(u, v);
            }
        }
    }
    for (k, seq) in f.seqs().iter().enumerate() {
        let m_next = p.min_of(k + 1);
        for (u, &b) in p.block(k).zip(seq) {
            for v in m_next..m_next + b {
                g.insert_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// Forward neighbors of the `s`-th vertex (1-based) of layer `N`.
pub fn forward_interval(
    p: &LayerPartition,
    f: &SequenceFamily,
    layer: usize,
    s: usize,
) -> Result<VertexSet> {
    if layer >= p.h() {
        return Err(Error::Domain(format!(
            "layer {layer} has no successor (h = {})",
            p.h()
        )));
    }
    if s == 0 || s > p.parts()[layer] {
        return Err(Error::Domain(format!(
            "position {s} outside 1..={} in layer {layer}",
            p.parts()[layer]
        )));
    }
    let b = f.seqs()[layer][s - 1];
    if b == 0 {
        return Err(Error::EmptyLink { layer, position: s });
    }
    let m = p.min_of(layer + 1);
    Ok(VertexSet::interval(m, m + b - 1))
}

/// Weakly increasing nonnegative sequences of a given length ending at `last`,
/// in lexicographic order.
pub fn enumerate_sequences(length: usize, last: usize) -> Result<Sequences> {
    if length == 0 || last == 0 {
        return Err(Error::Domain(format!(
            "length and last must be positive (got {length}, {last})"
        )));
    }
    let mut first = vec![0; length];
    first[length - 1] = last;
    Ok(Sequences { cur: Some(first) })
}

/// Iterator returned by [`enumerate_sequences`].
#[derive(Clone)]
pub struct Sequences {
    cur: Option<Vec<usize>>,
}

/// Lexicographic successor; the final entry stays pinned.
fn advance_sequence(s: &mut [usize]) -> bool {
    let last = s[s.len() - 1];
    let free = s.len() - 1;
    let Some(i) = (0..free).rev().find(|&i| s[i] < last) else {
        return false;
    };
    let v = s[i] + 1;
    s[i..free].iter_mut().for_each(|x| *x = v);
    true
}

impl Iterator for Sequences {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let cur = self.cur.take()?;
        let mut succ = cur.clone();
        if advance_sequence(&mut succ) {
            self.cur = Some(succ);
        }
        Some(cur)
    }
}

/// `prod_{N<h} C(a_{N+1} + a_N - 1, a_N - 1)`.
pub fn count_closed_graphs(p: &LayerPartition) -> BigUint {
    p.parts()
        .windows(2)
        .map(|w| binomial(BigUint::from(w[1] + w[0] - 1), BigUint::from(w[0] - 1)))
        .fold(BigUint::one(), |acc, c| acc * c)
}

/// Every connected graph on `{1..n}` closed under the identity labeling whose
/// layers are the blocks of `p`, lexicographic in `(S_0, ..., S_{h-1})`.
pub fn enumerate_closed_graphs(p: &LayerPartition) -> ClosedGraphs {
    let a = p.parts();
    let seqs = (0..p.h())
        .map(|k| {
            let mut s = vec![0; a[k]];
            s[a[k] - 1] = a[k + 1];
            s
        })
        .collect();
    ClosedGraphs { p: p.clone(), seqs: Some(seqs) }
}

/// Iterator returned by [`enumerate_closed_graphs`]; yields each family with its graph.
pub struct ClosedGraphs {
    p: LayerPartition,
    seqs: Option<Vec<Vec<usize>>>,
}

impl Iterator for ClosedGraphs {
    type Item = (SequenceFamily, Graph);

    fn next(&mut self) -> Option<Self::Item> {
        let cur = self.seqs.take()?;
        let mut succ = cur.clone();
        let mut advanced = false;
        for k in (0..succ.len()).rev() {
            if advance_sequence(&mut succ[k]) {
                advanced = true;
                break;
            }
            let len = succ[k].len();
            succ[k][..len - 1].iter_mut().for_each(|x| *x = 0);
        }
        if advanced {
            self.seqs = Some(succ);
        }
        let f = SequenceFamily(cur);
        let g = graph_from_sequences(&self.p, &f).expect("enumerated families are valid");
        Some((f, g))
    }
}

/// Number of connected graphs on `{1..n}` whose identity labeling is closed:
/// the sum of [`count_closed_graphs`] over all compositions of `n`.
///
/// Computed by dynamic programming over (labels left, size of last layer).
pub fn census_total(n: usize) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::Domain("n must be positive".into()));
    }
    // ways[rest][prev]: completions using `rest` more labels after a layer of size `prev`.
    let mut ways = vec![vec![BigUint::zero(); n + 1]; n];
    for prev in 1..=n {
        ways[0][prev] = BigUint::one();
    }
    for rest in 1..n {
        for prev in 1..=n {
            let mut total = BigUint::zero();
            for a in 1..=rest {
                total += binomial(BigUint::from(a + prev - 1), BigUint::from(prev - 1))
                    * &ways[rest - a][a];
            }
            ways[rest][prev] = total;
        }
    }
    Ok(ways[n - 1][1].clone())
}

/// Brute-force census: filters all `2^C(n,2)` graphs on `{1..n}`.
pub fn census_total_bruteforce(n: usize) -> Result<u64> {
    if n == 0 || n > 8 {
        return Err(Error::Domain(format!("brute-force census supports 1 <= n <= 8, got {n}")));
    }
    Ok(all_graphs(n)
        .filter(|g| g.is_connected() && is_closed_by_definition(g))
        .count() as u64)
}
