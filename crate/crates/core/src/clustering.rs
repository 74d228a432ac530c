//! Exact local and Watts–Strogatz clustering coefficients, and the lower
//! bounds they satisfy on connected closed graphs.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::closedness::is_closed_by_definition;
use crate::error::{Error, Result};
use crate::graph::{diameter, Graph};
use crate::search::is_closed_graph;

fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Number of edges among the neighbors of `v`.
fn linked_neighbor_pairs(g: &Graph, v: usize) -> usize {
    let nbrs: Vec<usize> = g.neighbors(v).collect();
    nbrs.iter()
        .enumerate()
        .map(|(k, &u)| nbrs[k + 1..].iter().filter(|&&w| g.has_edge(u, w)).count())
        .sum()
}

/// `C_v`: linked neighbor pairs over all neighbor pairs; 0 when `deg(v) <= 1`.
pub fn local_clustering(g: &Graph, v: usize) -> Result<BigRational> {
    g.check_vertex(v)?;
    let d = g.degree(v) as i64;
    if d <= 1 {
        return Ok(BigRational::zero());
    }
    Ok(ratio(linked_neighbor_pairs(g, v) as i64, d * (d - 1) / 2))
}

/// `C_WS`, the mean of `C_v` over all vertices.
pub fn watts_strogatz(g: &Graph) -> BigRational {
    if g.n() == 0 {
        return BigRational::zero();
    }
    let sum: BigRational = (1..=g.n())
        .map(|v| local_clustering(g, v).expect("vertex in range"))
        .sum();
    sum / BigInt::from(g.n())
}

/// Exact rational rendered as `p/q` in lowest terms, with a decimal approximation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Exact {
    pub exact: String,
    pub approx: String,
}

impl From<&BigRational> for Exact {
    fn from(q: &BigRational) -> Self {
        Exact {
            exact: format!("{}/{}", q.numer(), q.denom()),
            approx: format!("{:.6}", q.to_f64().unwrap_or(f64::NAN)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexClustering {
    pub vertex: usize,
    pub degree: usize,
    pub coefficient: BigRational,
}

/// Sizes of the four degree classes of a graph without isolated vertices.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct DegreeClasses {
    /// Degree at least 3.
    pub high: usize,
    /// Degree 2 with `C_v = 1`.
    pub closed_wedge: usize,
    /// Degree 2 with `C_v = 0`.
    pub open_wedge: usize,
    /// Degree 1.
    pub leaves: usize,
    /// Degree 0; only possible for disconnected or single-vertex graphs.
    pub isolated: usize,
}

/// Coefficients of every vertex plus their mean; defined for any graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClusteringProfile {
    pub per_vertex: Vec<VertexClustering>,
    pub cws: BigRational,
    pub classes: DegreeClasses,
}

pub fn clustering_profile(g: &Graph) -> ClusteringProfile {
    let mut classes = DegreeClasses::default();
    let per_vertex: Vec<VertexClustering> = (1..=g.n())
        .map(|v| {
            let coefficient = local_clustering(g, v).expect("vertex in range");
            let degree = g.degree(v);
            match degree {
                0 => classes.isolated += 1,
                1 => classes.leaves += 1,
                2 if coefficient.is_zero() => classes.open_wedge += 1,
                2 => classes.closed_wedge += 1,
                _ => classes.high += 1,
            }
            VertexClustering { vertex: v, degree, coefficient }
        })
        .collect();
    ClusteringProfile { per_vertex, cws: watts_strogatz(g), classes }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BoundVerdicts {
    /// (a) `C_v >= 1/2 - 1/(2(d-1))` whenever `d = deg(v) >= 2`.
    pub degree_bound: bool,
    /// (b) `C_v >= 1/3` whenever `deg(v) >= 3`.
    pub third_bound: bool,
    /// (c) at most `h - 1` vertices of degree 2 with `C_v = 0`.
    pub open_wedges_bound: bool,
    /// (d) at most two leaves.
    pub leaves_bound: bool,
    /// (e) `C_WS >= 1/3 - (h+1)/(3n)`.
    pub cws_bound: bool,
}

impl BoundVerdicts {
    pub fn all_hold(&self) -> bool {
        self.degree_bound && self.third_bound && self.open_wedges_bound && self.leaves_bound && self.cws_bound
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClusteringReport {
    pub profile: ClusteringProfile,
    pub n: usize,
    pub h: usize,
    /// The right-hand side `1/3 - (h+1)/(3n)` of the `C_WS` bound.
    pub cws_floor: BigRational,
    pub verdicts: BoundVerdicts,
}

impl ClusteringReport {
    /// `|C|`: vertices of degree 2 with `C_v = 0`.
    pub fn c(&self) -> usize {
        self.profile.classes.open_wedge
    }

    pub fn leaf_count(&self) -> usize {
        self.profile.classes.leaves
    }
}

/// Lower bound `1/2 - 1/(2(d-1))` on `C_v` for a vertex of degree `d >= 2`.
pub fn degree_floor(d: usize) -> BigRational {
    let d = d as i64;
    ratio(1, 2) - ratio(1, 2 * (d - 1))
}

/// Evaluates all clustering bounds on a connected closed graph with `n > 1`.
pub fn verify_clustering_bounds(g: &Graph) -> Result<ClusteringReport> {
    let n = g.n();
    if n <= 1 {
        return Err(Error::Precondition("clustering bounds need n > 1".into()));
    }
    if !g.is_connected() {
        return Err(Error::Precondition("clustering bounds need a connected graph".into()));
    }
    if !is_closed_by_definition(g) && !is_closed_graph(g) {
        return Err(Error::Precondition("clustering bounds need a closed graph".into()));
    }
    let profile = clustering_profile(g);
    let h = diameter(g)?;

    let degree_bound = profile
        .per_vertex
        .iter()
        .filter(|v| v.degree >= 2)
        .all(|v| v.coefficient >= degree_floor(v.degree));
    let third = ratio(1, 3);
    let third_bound = profile
        .per_vertex
        .iter()
        .filter(|v| v.degree >= 3)
        .all(|v| v.coefficient >= third);
    let cws_floor = ratio(1, 3) - ratio(h as i64 + 1, 3 * n as i64);
    let verdicts = BoundVerdicts {
        degree_bound,
        third_bound,
        open_wedges_bound: profile.classes.open_wedge < h,
        leaves_bound: profile.classes.leaves <= 2,
        cws_bound: profile.cws >= cws_floor,
    };
    Ok(ClusteringReport { profile, n, h, cws_floor, verdicts })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{claw, sec3};

    #[test]
    fn local_examples() {
        let g = sec3();
        assert_eq!(local_clustering(&g, 3).unwrap(), ratio(1, 3));
        assert_eq!(local_clustering(&g, 4).unwrap(), BigRational::zero());
        assert_eq!(local_clustering(&g, 1).unwrap(), ratio(1, 1));
        for v in 1..=5 {
            assert_eq!(local_clustering(&Graph::complete(5), v).unwrap(), ratio(1, 1));
        }
        assert!(local_clustering(&g, 5).is_err());
    }

    #[test]
    fn global_examples() {
        assert_eq!(watts_strogatz(&sec3()), ratio(7, 12));
        assert_eq!(watts_strogatz(&Graph::complete(4)), ratio(1, 1));
        assert_eq!(watts_strogatz(&Graph::path(3)), BigRational::zero());
    }

    #[test]
    fn rendering() {
        let e = Exact::from(&ratio(7, 12));
        assert_eq!(e.exact, "7/12");
        assert_eq!(e.approx, "0.583333");
        assert_eq!(Exact::from(&BigRational::zero()).exact, "0/1");
        assert_eq!(Exact::from(&ratio(4, 8)).exact, "1/2");
    }

    #[test]
    fn report_on_sec3() {
        let r = verify_clustering_bounds(&sec3()).unwrap();
        assert!(r.verdicts.all_hold());
        assert_eq!(r.h, 2);
        assert_eq!(r.cws_floor, ratio(1, 12));
        assert_eq!(r.profile.cws, ratio(7, 12));
        assert_eq!(r.profile.per_vertex[2].coefficient, ratio(1, 3));
        assert_eq!(r.leaf_count(), 1);
        assert_eq!(r.c(), 0);
        let cl = r.profile.classes;
        assert_eq!(cl.high + cl.closed_wedge + cl.open_wedge + cl.leaves, 4);
    }

    #[test]
    fn paths_meet_the_bound_at_zero() {
        for n in 2..=12 {
            let r = verify_clustering_bounds(&Graph::path(n)).unwrap();
            assert!(r.verdicts.all_hold());
            assert_eq!(r.h, n - 1);
            assert!(r.profile.cws.is_zero());
            assert!(r.cws_floor.is_zero());
            assert_eq!(r.leaf_count(), 2);
            assert_eq!(r.c(), n - 2);
        }
    }

    #[test]
    fn preconditions() {
        assert!(matches!(verify_clustering_bounds(&claw()), Err(Error::Precondition(_))));
        assert!(matches!(verify_clustering_bounds(&Graph::empty(1)), Err(Error::Precondition(_))));
        assert!(matches!(verify_clustering_bounds(&Graph::empty(3)), Err(Error::Precondition(_))));
    }

    #[test]
    fn degree_floor_values() {
        assert_eq!(degree_floor(2), BigRational::zero());
        assert_eq!(degree_floor(3), ratio(1, 4));
        assert_eq!(degree_floor(5), ratio(3, 8));
    }
}
