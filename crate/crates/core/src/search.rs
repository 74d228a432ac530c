//! Finding closed labelings: a pruned backtracking search, plus an exhaustive
//! permutation oracle used to validate everything else.

use fixedbitset::FixedBitSet;

use crate::closedness::is_closed_under;
use crate::error::{Error, Result};
use crate::graph::{bits_complete, Graph, Labeling};

pub const DEFAULT_ORACLE_BOUND: usize = 9;

/// Exhaustive search over all `n!` labelings.
#[derive(Clone, Copy, Debug)]
pub struct Oracle {
    bound: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle { bound: DEFAULT_ORACLE_BOUND }
    }
}

impl Oracle {
    pub fn with_bound(bound: usize) -> Self {
        Oracle { bound }
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    fn check(&self, g: &Graph) -> Result<()> {
        if g.n() > self.bound {
            Err(Error::OracleLimit { n: g.n(), bound: self.bound })
        } else {
            Ok(())
        }
    }

    /// All closed labelings in lexicographic order.
    pub fn closed_labelings(&self, g: &Graph) -> Result<Vec<Labeling>> {
        self.check(g)?;
        Ok(Permutations::new(g.n())
            .filter(|p| is_closed_under(g, p))
            .collect())
    }

    pub fn count(&self, g: &Graph) -> Result<usize> {
        self.check(g)?;
        Ok(Permutations::new(g.n()).filter(|p| is_closed_under(g, p)).count())
    }

    /// Lexicographically least closed labeling, if any.
    pub fn first(&self, g: &Graph) -> Result<Option<Labeling>> {
        self.check(g)?;
        Ok(Permutations::new(g.n()).find(|p| is_closed_under(g, p)))
    }
}

/// Oracle listing with the default bound.
pub fn all_closed_labelings_bruteforce(g: &Graph) -> Result<Vec<Labeling>> {
    Oracle::default().closed_labelings(g)
}

/// Permutations of `1..=n` in lexicographic order.
pub struct Permutations {
    next: Option<Vec<usize>>,
}

impl Permutations {
    pub fn new(n: usize) -> Self {
        Permutations { next: Some((1..=n).collect()) }
    }
}

impl Iterator for Permutations {
    type Item = Labeling;

    fn next(&mut self) -> Option<Labeling> {
        let cur = self.next.take()?;
        let mut succ = cur.clone();
        if next_permutation(&mut succ) {
            self.next = Some(succ);
        }
        Some(Labeling::from_vec_unchecked(cur))
    }
}

/// Advances `a` to its lexicographic successor; false when `a` was the last one.
pub(crate) fn next_permutation(a: &mut [usize]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let Some(i) = (0..a.len() - 1).rev().find(|&i| a[i] < a[i + 1]) else {
        return false;
    };
    let j = (i + 1..a.len()).rev().find(|&j| a[j] > a[i]).unwrap();
    a.swap(i, j);
    a[i + 1..].reverse();
    true
}

/// Backtracking that hands out labels `n, n-1, ..., 1`.
///
/// When `v` receives label `l`, its neighbors split exactly into the already
/// labeled ones (its upper neighborhood) and the rest (its lower one), so both
/// cliques are checked on the spot. Within `v`'s component the upper
/// neighborhood must also be the most recently labeled vertices and nonempty
/// unless `v` is the component's first, which is the interval criterion applied
/// to the component's relative order.
struct TopDown<'a> {
    g: &'a Graph,
    comp: Vec<usize>,
    pin_of_vertex: Vec<usize>,
    vertex_of_label: Vec<usize>,
    label: Vec<usize>,
    assigned: FixedBitSet,
    comp_stack: Vec<Vec<usize>>,
}

impl<'a> TopDown<'a> {
    fn new(g: &'a Graph) -> Self {
        let comp = g.components();
        let comps = comp.iter().skip(1).map(|&c| c + 1).max().unwrap_or(0);
        TopDown {
            g,
            comp,
            pin_of_vertex: vec![0; g.n() + 1],
            vertex_of_label: vec![0; g.n() + 1],
            label: vec![0; g.n() + 1],
            assigned: FixedBitSet::with_capacity(g.n() + 1),
            comp_stack: vec![Vec::new(); comps],
        }
    }

    fn pin(&mut self, v: usize, l: usize) {
        self.pin_of_vertex[v] = l;
        self.vertex_of_label[l] = v;
    }

    fn unpin(&mut self, v: usize) {
        let l = std::mem::take(&mut self.pin_of_vertex[v]);
        self.vertex_of_label[l] = 0;
    }

    fn reset(&mut self) {
        self.label.iter_mut().for_each(|l| *l = 0);
        self.assigned.clear();
        self.comp_stack.iter_mut().for_each(Vec::clear);
    }

    fn solve(&mut self) -> bool {
        self.reset();
        self.extend(self.g.n())
    }

    fn extend(&mut self, next: usize) -> bool {
        if next == 0 {
            return true;
        }
        let pinned = self.vertex_of_label[next];
        if pinned != 0 {
            return self.try_assign(pinned, next);
        }
        for v in 1..=self.g.n() {
            if self.label[v] == 0 && self.pin_of_vertex[v] == 0 && self.try_assign(v, next) {
                return true;
            }
        }
        false
    }

    fn try_assign(&mut self, v: usize, l: usize) -> bool {
        if !self.admissible(v) {
            return false;
        }
        self.label[v] = l;
        self.assigned.insert(v);
        self.comp_stack[self.comp[v]].push(v);
        if self.extend(l - 1) {
            return true;
        }
        self.comp_stack[self.comp[v]].pop();
        self.assigned.set(v, false);
        self.label[v] = 0;
        false
    }

    fn admissible(&self, v: usize) -> bool {
        let adj = self.g.adjacency(v);
        let mut upper = adj.clone();
        upper.intersect_with(&self.assigned);
        let k = upper.count_ones(..);
        let stack = &self.comp_stack[self.comp[v]];
        if !stack.is_empty() && k == 0 {
            return false;
        }
        if stack[stack.len() - k..].iter().any(|&u| !upper.contains(u)) {
            return false;
        }
        if !bits_complete(self.g, &upper) {
            return false;
        }
        let mut lower = adj.clone();
        lower.difference_with(&self.assigned);
        bits_complete(self.g, &lower)
    }

    fn labeling(&self) -> Labeling {
        Labeling::from_vec_unchecked(self.label[1..].to_vec())
    }
}

/// The subgraph induced on `vertices` (sorted), renumbered `1..=k` in order.
fn induced(g: &Graph, vertices: &[usize]) -> Graph {
    let mut pos = vec![0; g.n() + 1];
    for (i, &v) in vertices.iter().enumerate() {
        pos[v] = i + 1;
    }
    let mut h = Graph::empty(vertices.len());
    for &u in vertices {
        for w in g.neighbors(u).filter(|&w| w > u) {
            h.insert_edge(pos[u], pos[w]);
        }
    }
    h
}

/// A labeling is closed iff its restriction to every component is, so
/// existence is decided one component at a time.
fn every_component_closed(g: &Graph) -> bool {
    let comp = g.components();
    let comps = comp.iter().skip(1).map(|&c| c + 1).max().unwrap_or(0);
    if comps <= 1 {
        return TopDown::new(g).solve();
    }
    (0..comps).all(|c| {
        let members: Vec<usize> = (1..=g.n()).filter(|&v| comp[v] == c).collect();
        TopDown::new(&induced(g, &members)).solve()
    })
}

/// The lexicographically least closed labeling of `g`, if `g` is closed.
pub fn find_closed_labeling(g: &Graph) -> Option<Labeling> {
    if !every_component_closed(g) {
        return None;
    }
    let n = g.n();
    let mut search = TopDown::new(g);
    let mut used = vec![false; n + 1];
    // Fix label(1), label(2), ... one at a time to the least value that still extends.
    for v in 1..=n {
        let mut fixed = false;
        for l in 1..=n {
            if used[l] {
                continue;
            }
            search.pin(v, l);
            if search.solve() {
                used[l] = true;
                fixed = true;
                break;
            }
            search.unpin(v);
        }
        assert!(fixed, "a closed labeling exists, so some label extends");
    }
    let ok = search.solve();
    debug_assert!(ok);
    let lab = search.labeling();
    debug_assert!(is_closed_under(g, &lab));
    Some(lab)
}

/// Whether `g` has at least one closed labeling.
pub fn is_closed_graph(g: &Graph) -> bool {
    every_component_closed(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closedness::is_closed_by_definition;
    use crate::graph::{all_graphs, relabel};
    use crate::testutil::{arb_graph, claw, sec3};
    use proptest::prelude::*;

    #[test]
    fn permutations_are_lexicographic() {
        let all: Vec<Vec<usize>> = Permutations::new(3).map(|p| p.as_slice().to_vec()).collect();
        assert_eq!(
            all,
            vec![
                vec![1, 2, 3],
                vec![1, 3, 2],
                vec![2, 1, 3],
                vec![2, 3, 1],
                vec![3, 1, 2],
                vec![3, 2, 1]
            ]
        );
        assert_eq!(Permutations::new(5).count(), 120);
        assert_eq!(Permutations::new(0).count(), 1);
    }

    #[test]
    fn oracle_examples() {
        let labs = all_closed_labelings_bruteforce(&sec3()).unwrap();
        assert_eq!(labs.len(), 4);
        assert!(labs.contains(&Labeling::identity(4)));
        assert!(labs.contains(&Labeling::transposition(4, 1, 2)));
        assert_eq!(all_closed_labelings_bruteforce(&Graph::complete(3)).unwrap().len(), 6);
        assert!(all_closed_labelings_bruteforce(&claw()).unwrap().is_empty());
        assert_eq!(
            Oracle::with_bound(3).count(&sec3()),
            Err(Error::OracleLimit { n: 4, bound: 3 })
        );
        assert!(matches!(
            all_closed_labelings_bruteforce(&Graph::path(10)),
            Err(Error::OracleLimit { .. })
        ));
    }

    #[test]
    fn find_examples() {
        assert_eq!(find_closed_labeling(&Graph::empty(1)), Some(Labeling::identity(1)));
        assert_eq!(find_closed_labeling(&claw()), None);
        assert_eq!(find_closed_labeling(&sec3()), Some(Labeling::identity(4)));
        assert!(is_closed_graph(&Graph::path(7)));
        assert!(!is_closed_graph(&claw()));
        let two_edges = Graph::from_edges(4, &[(1, 2), (3, 4)]).unwrap();
        assert!(is_closed_graph(&two_edges));
        assert!(!Oracle::default().closed_labelings(&two_edges).unwrap().is_empty());
    }

    #[test]
    fn find_handles_larger_inputs() {
        let p = find_closed_labeling(&Graph::path(40)).unwrap();
        assert_eq!(p, Labeling::identity(40));
        // Path 1-2-...-30 relabeled so the identity is not closed.
        let scrambled: Vec<usize> = (1..=30).map(|v| (v * 7) % 31).collect();
        let g = relabel(&Graph::path(30), &Labeling::new(scrambled).unwrap()).unwrap();
        let lab = find_closed_labeling(&g).unwrap();
        assert!(is_closed_by_definition(&relabel(&g, &lab).unwrap()));
        let mut big_claw = Graph::path(25);
        big_claw.insert_edge(12, 25);
        assert_eq!(find_closed_labeling(&big_claw), None);
    }

    #[test]
    fn find_is_lexicographically_least_exhaustive() {
        for n in 1..=5 {
            for g in all_graphs(n) {
                assert_eq!(find_closed_labeling(&g), Oracle::default().first(&g).unwrap(), "{g:?}");
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn found_labelings_and_reversals_are_closed(g in arb_graph(8)) {
            if let Some(lab) = find_closed_labeling(&g) {
                prop_assert!(is_closed_by_definition(&relabel(&g, &lab).unwrap()));
                prop_assert!(is_closed_by_definition(&relabel(&g, &lab.reversal()).unwrap()));
            }
        }
    }
}
