//! Decompositions and connectivity predicates.
//!
//! Articulation points are found with one connectivity test per deleted
//! vertex, `O(n (n + m))` overall.

mod bridges;
mod scc;
mod tscc;

pub use bridges::bridges;
pub use scc::{
    is_strongly_connected, strongly_connected_components, unreachable_pair, SccPartition,
};
pub use tscc::{is_twinless_strongly_connected, twinless_sccs, TreeEdge, TsccPartition};

use crate::error::ConnectivityError;
use crate::graph::{Digraph, VertexDeletedView, VertexId};

/// Vertices whose deletion leaves a graph that is not strongly connected.
pub fn strong_articulation_points<G: Digraph>(g: &G) -> Result<Vec<VertexId>, ConnectivityError> {
    if g.vertex_count() < 3 {
        return Err(ConnectivityError::TooFewVertices);
    }
    if !is_strongly_connected(g) {
        return Err(ConnectivityError::NotStronglyConnected);
    }
    Ok(g.vertices()
        .filter(|&x| !is_strongly_connected(&VertexDeletedView::new(g, x)))
        .collect())
}

/// Vertices whose deletion leaves a graph that is not twinless strongly
/// connected.
pub fn twinless_articulation_points<G: Digraph>(g: &G) -> Result<Vec<VertexId>, ConnectivityError> {
    if g.vertex_count() < 3 {
        return Err(ConnectivityError::TooFewVertices);
    }
    if !is_twinless_strongly_connected(g) {
        return Err(ConnectivityError::NotTwinlessStronglyConnected);
    }
    Ok(g.vertices()
        .filter(|&x| !is_twinless_strongly_connected(&VertexDeletedView::new(g, x)))
        .collect())
}

/// At least 3 vertices, strongly connected, and no strong articulation point.
pub fn is_2_vertex_connected<G: Digraph>(g: &G) -> bool {
    g.vertex_count() >= 3
        && is_strongly_connected(g)
        && g.vertices()
            .all(|x| is_strongly_connected(&VertexDeletedView::new(g, x)))
}

/// At least 3 vertices, twinless strongly connected, and no twinless
/// articulation point.
pub fn is_2_vertex_twinless_connected<G: Digraph>(g: &G) -> bool {
    g.vertex_count() >= 3
        && is_twinless_strongly_connected(g)
        && g.vertices()
            .all(|x| is_twinless_strongly_connected(&VertexDeletedView::new(g, x)))
}

/// Everything [`connectivity_report`] computes about one graph.
///
/// When the graph is too small or not (twinless) strongly connected the
/// articulation-point sets are left empty and the matching `*_computed`
/// flag is false.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectivityReport {
    pub n: usize,
    pub m: usize,
    pub is_strongly_connected: bool,
    pub is_twinless_strongly_connected: bool,
    pub scc_count: usize,
    pub tscc_count: usize,
    pub strong_articulation_points: Vec<VertexId>,
    pub twinless_articulation_points: Vec<VertexId>,
    pub saps_computed: bool,
    pub taps_computed: bool,
    pub is_2_vertex_connected: bool,
    pub is_2_vertex_twinless_connected: bool,
}

impl ConnectivityReport {
    pub fn s_a(&self) -> usize {
        self.strong_articulation_points.len()
    }

    pub fn a_t(&self) -> usize {
        self.twinless_articulation_points.len()
    }
}

pub fn connectivity_report<G: Digraph>(g: &G) -> ConnectivityReport {
    let tscc = twinless_sccs(g);
    let scc_count = tscc.scc().count();
    let tscc_count = tscc.count();
    let n = g.vertex_count();
    let sc = n > 0 && scc_count == 1;
    let tsc = n > 0 && tscc_count == 1;
    let saps = strong_articulation_points(g).ok();
    let taps = twinless_articulation_points(g).ok();
    ConnectivityReport {
        n,
        m: g.edge_count(),
        is_strongly_connected: sc,
        is_twinless_strongly_connected: tsc,
        scc_count,
        tscc_count,
        is_2_vertex_connected: saps.as_ref().is_some_and(|s| s.is_empty()),
        is_2_vertex_twinless_connected: taps.as_ref().is_some_and(|t| t.is_empty()),
        saps_computed: saps.is_some(),
        taps_computed: taps.is_some(),
        strong_articulation_points: saps.unwrap_or_default(),
        twinless_articulation_points: taps.unwrap_or_default(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::DirectedGraph;

    fn g(n: usize, pairs: &[(usize, usize)]) -> DirectedGraph {
        DirectedGraph::from_edge_list(n, pairs).unwrap()
    }

    fn bidirected(n: usize, pairs: &[(usize, usize)]) -> DirectedGraph {
        let all: Vec<_> = pairs.iter().flat_map(|&(u, v)| [(u, v), (v, u)]).collect();
        g(n, &all)
    }

    fn ids(xs: &[usize]) -> Vec<VertexId> {
        xs.iter().map(|&x| VertexId::new(x)).collect()
    }

    #[test]
    fn star_center_is_strong_articulation_point() {
        let star = bidirected(4, &[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(strong_articulation_points(&star).unwrap(), ids(&[0]));
    }

    #[test]
    fn directed_triangle() {
        let tri = g(3, &[(0, 1), (1, 2), (2, 0)]);
        assert_eq!(strong_articulation_points(&tri).unwrap(), ids(&[0, 1, 2]));
        let r = connectivity_report(&tri);
        assert!(r.is_strongly_connected);
        assert!(r.is_twinless_strongly_connected);
        assert_eq!(r.s_a(), 3);
        assert!(!r.is_2_vertex_connected);
        assert!(!r.is_2_vertex_twinless_connected);
    }

    #[test]
    fn bidirected_triangle() {
        let tri = bidirected(3, &[(0, 1), (1, 2), (2, 0)]);
        assert_eq!(twinless_articulation_points(&tri).unwrap(), ids(&[0, 1, 2]));
        assert!(strong_articulation_points(&tri).unwrap().is_empty());
        assert!(is_2_vertex_connected(&tri));
        assert!(!is_2_vertex_twinless_connected(&tri));
    }

    #[test]
    fn precondition_errors() {
        let pair = bidirected(2, &[(0, 1)]);
        assert_eq!(
            strong_articulation_points(&pair),
            Err(ConnectivityError::TooFewVertices)
        );
        let path = g(3, &[(0, 1), (1, 2)]);
        assert_eq!(
            strong_articulation_points(&path),
            Err(ConnectivityError::NotStronglyConnected)
        );
        let bipath = bidirected(3, &[(0, 1), (1, 2)]);
        assert_eq!(
            twinless_articulation_points(&bipath),
            Err(ConnectivityError::NotTwinlessStronglyConnected)
        );
    }

    #[test]
    fn degenerate_predicates_are_false() {
        let one = g(1, &[]);
        assert!(!is_2_vertex_connected(&one));
        assert!(!is_2_vertex_twinless_connected(&one));
        let isolated = g(4, &[(0, 1), (1, 2), (2, 0)]);
        assert!(!is_2_vertex_connected(&isolated));
    }

    #[test]
    fn report_on_bidirected_pair() {
        let r = connectivity_report(&bidirected(2, &[(0, 1)]));
        assert!(r.is_strongly_connected);
        assert!(!r.is_twinless_strongly_connected);
        assert_eq!(r.tscc_count, 2);
        assert!(!r.saps_computed);
        assert!(!r.taps_computed);
        assert!(r.twinless_articulation_points.is_empty());
    }
}
