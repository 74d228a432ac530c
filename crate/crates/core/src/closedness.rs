//! Closed labelings and the distance layers of a labeled connected graph.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{
    bfs_distances, diameter, is_complete_on, is_interval, upper_neighborhood, Graph, Labeling,
    VertexSet,
};

/// A triple `(center; left, right)` with both `{left, center}` and
/// `{center, right}` edges pointing the same way but `{left, right}` missing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub center: usize,
    pub left: usize,
    pub right: usize,
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({};{},{})", self.center, self.left, self.right)
    }
}

/// First violating triple of the identity labeling, scanning centers in
/// ascending order and, per center, upper pairs before lower pairs.
pub fn first_violation(g: &Graph) -> Option<Violation> {
    for i in 1..=g.n() {
        let (upper, lower): (Vec<usize>, Vec<usize>) = g.neighbors(i).partition(|&j| j > i);
        for side in [&upper, &lower] {
            for (a, &j) in side.iter().enumerate() {
                for &k in &side[a + 1..] {
                    if !g.has_edge(j, k) {
                        return Some(Violation { center: i, left: j, right: k });
                    }
                }
            }
        }
    }
    None
}

/// Whether the identity labeling of `g` is closed. Total: no connectivity assumption.
pub fn is_closed_by_definition(g: &Graph) -> bool {
    first_violation(g).is_none()
}

/// Whether `lab` is a closed labeling of `g`, i.e. whether
/// `is_closed_by_definition(relabel(g, lab))`, without building the relabeled graph.
pub fn is_closed_under(g: &Graph, lab: &Labeling) -> bool {
    debug_assert_eq!(lab.len(), g.n());
    for v in 1..=g.n() {
        let lv = lab.label_of(v);
        let nbrs: Vec<usize> = g.neighbors(v).collect();
        for (a, &u) in nbrs.iter().enumerate() {
            let u_up = lab.label_of(u) > lv;
            for &w in &nbrs[a + 1..] {
                if (lab.label_of(w) > lv) == u_up && !g.has_edge(u, w) {
                    return false;
                }
            }
        }
    }
    true
}

/// The interval criterion: every `N^>(i)` is complete and an interval
/// `[i+1, i+r]` starting at the successor of `i` (empty allowed).
/// Agrees with [`is_closed_by_definition`] on connected graphs.
///
/// An interval that skips `i+1` is not enough: on the path `1 - 3 - 2` every
/// upper neighborhood is a complete interval but `{1,2}` is missing below 3.
pub fn is_closed_by_intervals(g: &Graph) -> Result<bool> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    for i in 1..=g.n() {
        let up = upper_neighborhood(g, i)?;
        let starts_at_successor = up.min_vertex().is_none_or(|m| m == i + 1);
        if !starts_at_successor || !is_interval(&up) || !is_complete_on(g, &up) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Distance layers `L_0 = {1}, L_1, ..., L_h` from vertex 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct LayerDecomposition {
    layers: Vec<VertexSet>,
}

impl LayerDecomposition {
    pub fn h(&self) -> usize {
        self.layers.len() - 1
    }

    pub fn layers(&self) -> &[VertexSet] {
        &self.layers
    }

    pub fn layer(&self, index: usize) -> &VertexSet {
        &self.layers[index]
    }

    /// `(a_0, ..., a_h)`.
    pub fn sizes(&self) -> Vec<usize> {
        self.layers.iter().map(VertexSet::len).collect()
    }

    /// Layer index of every vertex; slot 0 unused.
    pub fn index_of_vertices(&self, n: usize) -> Vec<usize> {
        let mut idx = vec![usize::MAX; n + 1];
        for (k, layer) in self.layers.iter().enumerate() {
            for v in layer.iter() {
                idx[v] = k;
            }
        }
        idx
    }
}

pub fn layer_decomposition(g: &Graph) -> Result<LayerDecomposition> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let dist = bfs_distances(g, 1);
    let h = dist.iter().map(|d| d.expect("connected")).max().unwrap_or(0);
    let mut buckets = vec![Vec::new(); h + 1];
    for (i, d) in dist.iter().enumerate() {
        buckets[d.unwrap()].push(i + 1);
    }
    Ok(LayerDecomposition {
        layers: buckets.into_iter().map(VertexSet::from_iter).collect(),
    })
}

/// Every edge joins vertices whose layers differ by at most one.
/// Holds for any connected labeled graph.
pub fn edges_span_adjacent_layers(g: &Graph, layers: &LayerDecomposition) -> bool {
    let idx = layers.index_of_vertices(g.n());
    g.edges().iter().all(|&(u, v)| idx[u].abs_diff(idx[v]) <= 1)
}

/// Verdicts for the structural consequences of a closed labeling of a connected graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LayerReport {
    pub h: usize,
    pub diameter: usize,
    /// (a) each layer is complete and an interval.
    pub layers_complete_intervals: bool,
    /// (b) with `d = max(L_N)`, `L_{N+1} = N^>(d)` for every `N < h`.
    pub next_layer_is_upper_of_max: bool,
    /// (c) the diameter equals `h`.
    pub diameter_is_h: bool,
    /// (d) every edge joins equal or adjacent layers.
    pub edges_adjacent_layers: bool,
    /// (e) every longest shortest path runs from `L_0 ∪ L_1` to `L_h`.
    pub longest_paths_span_layers: bool,
    /// Number of vertex pairs realizing the diameter.
    pub diameter_pairs: usize,
}

impl LayerReport {
    pub fn all_hold(&self) -> bool {
        self.layers_complete_intervals
            && self.next_layer_is_upper_of_max
            && self.diameter_is_h
            && self.edges_adjacent_layers
            && self.longest_paths_span_layers
    }
}

/// Checks the layer structure of a connected graph whose identity labeling is closed.
pub fn verify_layer_theorems(g: &Graph) -> Result<LayerReport> {
    if !g.is_connected() {
        return Err(Error::Precondition(
            "layer theorems need a connected graph".into(),
        ));
    }
    if let Some(v) = first_violation(g) {
        return Err(Error::Precondition(format!(
            "layer theorems need a closed labeling; violating triple {v}"
        )));
    }
    let ld = layer_decomposition(g)?;
    let h = ld.h();
    let diam = diameter(g)?;

    let layers_complete_intervals = ld
        .layers()
        .iter()
        .all(|l| is_interval(l) && is_complete_on(g, l));

    let next_layer_is_upper_of_max = (0..h).all(|k| {
        let d = ld.layer(k).max_vertex().expect("layers are nonempty");
        upper_neighborhood(g, d).is_ok_and(|up| &up == ld.layer(k + 1))
    });

    let idx = ld.index_of_vertices(g.n());
    let all_dist: Vec<Vec<Option<usize>>> = (1..=g.n()).map(|s| bfs_distances(g, s)).collect();
    let mut diameter_pairs = 0;
    let mut longest_paths_span_layers = true;
    for u in 1..=g.n() {
        for v in u + 1..=g.n() {
            if all_dist[u - 1][v - 1] != Some(diam) {
                continue;
            }
            diameter_pairs += 1;
            // Every shortest u-v path has endpoints {u, v}, so the pair decides the verdict.
            let low = |x: usize| idx[x] <= 1;
            let top = |x: usize| idx[x] == h;
            if !((low(u) && top(v)) || (low(v) && top(u))) {
                longest_paths_span_layers = false;
            }
        }
    }

    Ok(LayerReport {
        h,
        diameter: diam,
        layers_complete_intervals,
        next_layer_is_upper_of_max,
        diameter_is_h: diam == h,
        edges_adjacent_layers: edges_span_adjacent_layers(g, &ld),
        longest_paths_span_layers,
        diameter_pairs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{all_graphs, relabel};
    use crate::testutil::{arb_graph_with_labeling, claw, sec3};
    use proptest::prelude::*;

    #[test]
    fn definition_examples() {
        assert!(is_closed_by_definition(&sec3()));
        assert!(!is_closed_by_definition(&claw()));
        assert_eq!(
            first_violation(&claw()),
            Some(Violation { center: 1, left: 2, right: 3 })
        );
        assert_eq!(first_violation(&claw()).unwrap().to_string(), "(1;2,3)");
        for n in 1..=6 {
            assert!(is_closed_by_definition(&Graph::complete(n)));
        }
        // Disconnected graphs are judged locally.
        let two_edges = Graph::from_edges(4, &[(1, 3), (2, 4)]).unwrap();
        assert!(is_closed_by_definition(&two_edges));
    }

    #[test]
    fn interval_examples() {
        assert_eq!(is_closed_by_intervals(&sec3()), Ok(true));
        let cherry = Graph::from_edges(3, &[(1, 2), (1, 3)]).unwrap();
        assert_eq!(is_closed_by_intervals(&cherry), Ok(false));
        assert_eq!(is_closed_by_intervals(&Graph::path(4)), Ok(true));
        assert_eq!(is_closed_by_intervals(&Graph::empty(2)), Err(Error::NotConnected));
    }

    #[test]
    fn layer_examples() {
        let ld = layer_decomposition(&sec3()).unwrap();
        assert_eq!(
            ld.layers(),
            &[VertexSet::from([1]), VertexSet::from([2, 3]), VertexSet::from([4])]
        );
        assert_eq!(ld.h(), 2);
        assert_eq!(
            layer_decomposition(&Graph::path(3)).unwrap().sizes(),
            vec![1, 1, 1]
        );
        assert_eq!(
            layer_decomposition(&Graph::complete(3)).unwrap().layers(),
            &[VertexSet::from([1]), VertexSet::from([2, 3])]
        );
        assert_eq!(layer_decomposition(&Graph::empty(3)), Err(Error::NotConnected));
    }

    #[test]
    fn layer_theorem_examples() {
        let r = verify_layer_theorems(&sec3()).unwrap();
        assert!(r.all_hold());
        assert_eq!(r.h, 2);
        for n in 2..=6 {
            let r = verify_layer_theorems(&Graph::complete(n)).unwrap();
            assert!(r.all_hold());
            assert_eq!(r.h, 1);
            let r = verify_layer_theorems(&Graph::path(n)).unwrap();
            assert!(r.all_hold());
            assert_eq!(r.h, n - 1);
        }
        assert!(matches!(
            verify_layer_theorems(&claw()),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            verify_layer_theorems(&Graph::empty(2)),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn interval_criterion_matches_definition_small() {
        for n in 1..=5 {
            for g in all_graphs(n).filter(Graph::is_connected) {
                assert_eq!(is_closed_by_intervals(&g).unwrap(), is_closed_by_definition(&g), "{g:?}");
            }
        }
    }

    #[test]
    fn adjacent_layer_lemma_holds_without_closedness() {
        for n in 1..=6 {
            for g in all_graphs(n).filter(Graph::is_connected) {
                let ld = layer_decomposition(&g).unwrap();
                assert!(edges_span_adjacent_layers(&g, &ld), "{g:?}");
            }
        }
    }

    proptest! {
        #[test]
        fn closed_under_matches_relabel((g, lab) in arb_graph_with_labeling(8)) {
            let h = relabel(&g, &lab).unwrap();
            prop_assert_eq!(is_closed_under(&g, &lab), is_closed_by_definition(&h));
        }
    }
}
