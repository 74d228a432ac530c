use proptest::prelude::*;

use crate::graph::{Graph, Labeling};

/// Four vertices: a triangle on `{1,2,3}` with a pendant edge `{3,4}`.
pub(crate) fn sec3() -> Graph {
    Graph::from_edges(4, &[(1, 2), (1, 3), (2, 3), (3, 4)]).unwrap()
}

pub(crate) fn claw() -> Graph {
    Graph::star(3)
}

pub(crate) fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 1..=n {
                for v in u + 1..=n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

pub(crate) fn arb_graph_with_labeling(max_n: usize) -> impl Strategy<Value = (Graph, Labeling)> {
    arb_graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), Just((1..=n).collect::<Vec<_>>()).prop_shuffle())
            .prop_map(|(g, p)| (g, Labeling::new(p).unwrap()))
    })
}
