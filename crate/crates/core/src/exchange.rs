//! Exchangeable vertices, the quotient by exchangeability, and the exact
//! count and enumeration of all closed labelings of a connected closed graph.

use fixedbitset::FixedBitSet;
use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use crate::closedness::{first_violation, is_closed_by_definition};
use crate::error::{Error, Result};
use crate::graph::{is_complete_on, is_interval, relabel, Graph, Labeling, VertexSet};
use crate::search::{find_closed_labeling, next_permutation};

/// `{v} ∪ N(v)`.
pub fn full_neighborhood(g: &Graph, v: usize) -> Result<VertexSet> {
    g.check_vertex(v)?;
    Ok(std::iter::once(v).chain(g.neighbors(v)).collect())
}

fn full_bits(g: &Graph, v: usize) -> FixedBitSet {
    let mut b = g.adjacency(v).clone();
    b.insert(v);
    b
}

/// Classes of vertices with equal full neighborhoods, ordered by minimum element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExchangePartition {
    classes: Vec<VertexSet>,
    #[serde(skip)]
    class_of: Vec<usize>,
}

impl ExchangePartition {
    pub fn classes(&self) -> &[VertexSet] {
        &self.classes
    }

    pub fn r(&self) -> usize {
        self.classes.len()
    }

    /// Zero-based index of the class containing `v`.
    pub fn class_of(&self, v: usize) -> usize {
        self.class_of[v]
    }

    pub fn exchangeable(&self, v: usize, w: usize) -> bool {
        self.class_of[v] == self.class_of[w]
    }

    /// Sizes `|E_1|, ..., |E_r|`.
    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(VertexSet::len).collect()
    }
}

pub fn exchange_partition(g: &Graph) -> ExchangePartition {
    let n = g.n();
    let full: Vec<FixedBitSet> = (0..=n)
        .map(|v| if v == 0 { FixedBitSet::new() } else { full_bits(g, v) })
        .collect();
    let mut class_of = vec![usize::MAX; n + 1];
    let mut classes = Vec::new();
    // Scanning in ascending order numbers classes by their minimum element.
    for v in 1..=n {
        if class_of[v] != usize::MAX {
            continue;
        }
        let idx = classes.len();
        let members: VertexSet = (v..=n).filter(|&w| full[w] == full[v]).collect();
        for w in members.iter() {
            class_of[w] = idx;
        }
        classes.push(members);
    }
    ExchangePartition { classes, class_of }
}

/// All exchange classes are singletons.
pub fn is_collapsed(g: &Graph) -> bool {
    exchange_partition(g).r() == g.n()
}

/// Relabels `g` by the transposition `(i j)` of two exchangeable vertices of a
/// graph whose identity labeling is closed; the result is again closed.
pub fn swap_exchangeable(g: &Graph, i: usize, j: usize) -> Result<Graph> {
    g.check_vertex(i)?;
    g.check_vertex(j)?;
    if let Some(v) = first_violation(g) {
        return Err(Error::Precondition(format!(
            "identity labeling is not closed; violating triple {v}"
        )));
    }
    if full_bits(g, i) != full_bits(g, j) {
        return Err(Error::NotExchangeable(i, j));
    }
    let swapped = relabel(g, &Labeling::transposition(g.n(), i, j))?;
    assert!(
        is_closed_by_definition(&swapped),
        "swapping exchangeable vertices {i} and {j} broke closedness"
    );
    Ok(swapped)
}

/// `G/~`: one vertex per exchange class, joined when the classes are joined.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientGraph {
    pub base: ExchangePartition,
    pub graph: Graph,
}

fn check_connected_closed(g: &Graph) -> Result<()> {
    if !g.is_connected() {
        return Err(Error::Precondition("graph must be connected".into()));
    }
    if let Some(v) = first_violation(g) {
        return Err(Error::Precondition(format!(
            "identity labeling is not closed; violating triple {v}"
        )));
    }
    Ok(())
}

/// Quotient of a connected graph whose identity labeling is closed.
///
/// Checks on the way that classes are complete intervals and that class
/// adjacency is all-or-nothing.
pub fn quotient_graph(g: &Graph) -> Result<QuotientGraph> {
    check_connected_closed(g)?;
    let base = exchange_partition(g);
    for c in base.classes() {
        if !is_interval(c) || !is_complete_on(g, c) {
            return Err(Error::Precondition(format!(
                "exchange class {c} is not a complete interval"
            )));
        }
    }
    let r = base.r();
    let mut q = Graph::empty(r);
    for a in 0..r {
        for b in a + 1..r {
            let (ea, eb) = (&base.classes()[a], &base.classes()[b]);
            let joined = ea
                .iter()
                .flat_map(|i| eb.iter().map(move |j| (i, j)))
                .filter(|&(i, j)| g.has_edge(i, j))
                .count();
            if joined != 0 && joined != ea.len() * eb.len() {
                return Err(Error::Precondition(format!(
                    "classes {ea} and {eb} are only partially joined"
                )));
            }
            if joined != 0 {
                q.insert_edge(a + 1, b + 1);
            }
        }
    }
    Ok(QuotientGraph { base, graph: q })
}

fn factorial(k: usize) -> BigUint {
    (1..=k).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

/// A closed labeling for a connected graph, or the reason there is none.
fn base_labeling(g: &Graph) -> Result<Labeling> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    find_closed_labeling(g).ok_or(Error::NotClosed)
}

/// Number of closed labelings of a connected closed graph:
/// `2 * prod |E_a|!` when there are `r > 1` classes, `n!` when `g` is complete.
pub fn count_closed_labelings(g: &Graph) -> Result<BigUint> {
    base_labeling(g)?;
    let part = exchange_partition(g);
    if part.r() == 1 {
        return Ok(factorial(g.n()));
    }
    Ok(part
        .sizes()
        .into_iter()
        .fold(BigUint::from(2u32), |acc, s| acc * factorial(s)))
}

/// Every closed labeling of a connected closed graph, each exactly once.
///
/// Order: the classes laid out in their closed order, then reversed; within
/// one layout the per-class permutations advance like an odometer whose last
/// class turns fastest, each class running through its permutations in
/// lexicographic order.
pub fn enumerate_closed_labelings(g: &Graph) -> Result<ClosedLabelings> {
    let base = base_labeling(g)?;
    let part = exchange_partition(g);
    // Classes are partition-invariant; order them by their label blocks under `base`.
    let mut classes: Vec<Vec<usize>> = part
        .classes()
        .iter()
        .map(|c| c.as_slice().to_vec())
        .collect();
    classes.sort_by_key(|c| c.iter().map(|&v| base.label_of(v)).min());
    let layouts = if classes.len() > 1 { 2 } else { 1 };
    let perms = classes.iter().map(|c| (0..c.len()).collect()).collect();
    Ok(ClosedLabelings {
        n: g.n(),
        classes,
        layouts,
        layout: 0,
        perms,
        done: false,
    })
}

/// Iterator returned by [`enumerate_closed_labelings`].
pub struct ClosedLabelings {
    n: usize,
    classes: Vec<Vec<usize>>,
    layouts: usize,
    layout: usize,
    perms: Vec<Vec<usize>>,
    done: bool,
}

impl ClosedLabelings {
    fn current(&self) -> Labeling {
        let mut perm = vec![0; self.n];
        let order: Vec<usize> = if self.layout == 0 {
            (0..self.classes.len()).collect()
        } else {
            (0..self.classes.len()).rev().collect()
        };
        let mut next_label = 1;
        for a in order {
            let block = next_label;
            for (k, &v) in self.classes[a].iter().enumerate() {
                perm[v - 1] = block + self.perms[a][k];
            }
            next_label += self.classes[a].len();
        }
        Labeling::from_vec_unchecked(perm)
    }

    fn advance(&mut self) {
        for a in (0..self.perms.len()).rev() {
            if next_permutation(&mut self.perms[a]) {
                return;
            }
            self.perms[a].sort_unstable();
        }
        self.layout += 1;
        if self.layout == self.layouts {
            self.done = true;
        }
    }
}

impl Iterator for ClosedLabelings {
    type Item = Labeling;

    fn next(&mut self) -> Option<Labeling> {
        if self.done {
            return None;
        }
        let out = self.current();
        self.advance();
        Some(out)
    }
}
