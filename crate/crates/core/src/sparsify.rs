//! Sparsification to a 2-vertex-twinless connected spanning subgraph.
//!
//! [`approx_m2vtcs`] first trims the input to an inclusion-minimal
//! 2-vertex-connected spanning subgraph `E_2v`, finds its twinless
//! articulation points, and then for each such vertex `x` keeps adding the
//! smallest edge that joins two twinless components of `E_2t - x` until
//! `E_2t - x` is twinless strongly connected. The result has at most
//! `4n + a_t (n - 1)` edges, where `a_t` counts the twinless articulation
//! points of `E_2v`.

use std::fmt;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::connectivity::{
    is_2_vertex_connected, is_2_vertex_twinless_connected, is_twinless_strongly_connected,
    twinless_articulation_points, twinless_sccs, unreachable_pair, TsccPartition,
};
use crate::error::{GraphError, SparsifyError};
use crate::graph::{
    Digraph, DirectedGraph, EdgeId, EdgeSet, EdgeSubgraphView, VertexDeletedView, VertexId,
};

/// Order in which greedy deletion visits edges.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum EdgeOrder {
    #[default]
    Lexicographic,
    Reverse,
    /// A seeded shuffle of the lexicographic order.
    Seeded(u64),
}

impl EdgeOrder {
    pub fn permutation(&self, m: usize) -> Vec<EdgeId> {
        let mut ids: Vec<EdgeId> = (0..m).map(EdgeId::new).collect();
        match *self {
            EdgeOrder::Lexicographic => {}
            EdgeOrder::Reverse => ids.reverse(),
            EdgeOrder::Seeded(seed) => ids.shuffle(&mut ChaCha8Rng::seed_from_u64(seed)),
        }
        ids
    }
}

/// Why a graph is not 2-vertex-twinless connected. Checks run in the order
/// of the variants and the first failure is reported.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Certificate {
    TooFewVertices {
        n: usize,
    },
    /// `to` is not reachable from `from`.
    NotStronglyConnected {
        from: VertexId,
        to: VertexId,
    },
    /// `u` and `v` lie in different twinless components.
    NotTwinlessStronglyConnected {
        u: VertexId,
        v: VertexId,
        components: usize,
    },
    /// The smallest vertex whose deletion breaks twinless strong connectivity.
    TwinlessArticulationPoint(VertexId),
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certificate::TooFewVertices { n } => write!(f, "only {n} vertices"),
            Certificate::NotStronglyConnected { from, to } => {
                write!(f, "vertex {to} is unreachable from vertex {from}")
            }
            Certificate::NotTwinlessStronglyConnected { u, v, components } => write!(
                f,
                "vertices {u} and {v} lie in different twinless components ({components} in total)"
            ),
            Certificate::TwinlessArticulationPoint(x) => {
                write!(f, "vertex {x} is a twinless articulation point")
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail(Certificate),
}

impl Verdict {
    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn certificate(&self) -> Option<Certificate> {
        match self {
            Verdict::Pass => None,
            Verdict::Fail(c) => Some(*c),
        }
    }
}

/// Checks 2-vertex-twinless connectivity and explains any failure.
pub fn verify_2vtc<G: Digraph>(g: &G) -> Verdict {
    let n = g.vertex_count();
    if n < 3 {
        return Verdict::Fail(Certificate::TooFewVertices { n });
    }
    if let Some((from, to)) = unreachable_pair(g) {
        return Verdict::Fail(Certificate::NotStronglyConnected { from, to });
    }
    if !is_twinless_strongly_connected(g) {
        let p = twinless_sccs(g);
        let u = g.vertices().next().expect("n >= 3");
        let v = g
            .vertices()
            .find(|&v| !p.same(u, v))
            .expect("more than one twinless component");
        return Verdict::Fail(Certificate::NotTwinlessStronglyConnected {
            u,
            v,
            components: p.count(),
        });
    }
    if let Some(x) = g
        .vertices()
        .find(|&x| !is_twinless_strongly_connected(&VertexDeletedView::new(g, x)))
    {
        return Verdict::Fail(Certificate::TwinlessArticulationPoint(x));
    }
    // Every vertex keeps in- and out-degree 2, so a passing set has >= 2n edges.
    debug_assert!(g.edge_count() >= 2 * n);
    Verdict::Pass
}

/// [`verify_2vtc`] on a bare vertex count and edge list.
pub fn verify_edge_list(n: usize, pairs: &[(usize, usize)]) -> Result<Verdict, GraphError> {
    Ok(verify_2vtc(&DirectedGraph::from_edge_list(n, pairs)?))
}

/// One edge addition made while repairing a twinless articulation point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AugmentationStep {
    pub tap: VertexId,
    pub edge: EdgeId,
    /// Twinless components of `E_2t - tap` before and after the addition.
    pub components_before: usize,
    pub components_after: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparsifyResult {
    pub n: usize,
    pub m: usize,
    /// Minimal 2-vertex-connected spanning edge set.
    pub e2v: EdgeSet,
    /// The 2-vertex-twinless connected output.
    pub e2t: EdgeSet,
    /// Twinless articulation points of `(V, e2v)`, ascending.
    pub taps_of_e2v: Vec<VertexId>,
    pub added_edges: Vec<AugmentationStep>,
    pub verdict: Verdict,
}

impl SparsifyResult {
    pub fn a_t(&self) -> usize {
        self.taps_of_e2v.len()
    }

    /// `4n + a_t (n - 1)`.
    pub fn bound(&self) -> usize {
        size_bound(self.n, self.a_t())
    }

    /// `2 + a_t / 2`.
    pub fn ratio_ceiling(&self) -> f64 {
        ratio_ceiling(self.a_t())
    }
}

pub fn size_bound(n: usize, a_t: usize) -> usize {
    4 * n + a_t * n.saturating_sub(1)
}

pub fn ratio_ceiling(a_t: usize) -> f64 {
    2.0 + a_t as f64 / 2.0
}

/// Reusable BFS state for repeated `u -> v` reachability queries.
struct Reach {
    stamp: Vec<u32>,
    epoch: u32,
    queue: Vec<VertexId>,
}

impl Reach {
    fn new(n: usize) -> Self {
        Self {
            stamp: vec![0; n],
            epoch: 0,
            queue: Vec::with_capacity(n),
        }
    }

    /// Whether `to` is reachable from `from` in `g` without passing `avoid`.
    fn path<G: Digraph>(
        &mut self,
        g: &G,
        from: VertexId,
        to: VertexId,
        avoid: Option<VertexId>,
    ) -> bool {
        self.epoch += 1;
        let epoch = self.epoch;
        if let Some(x) = avoid {
            self.stamp[x.index()] = epoch;
        }
        self.queue.clear();
        self.stamp[from.index()] = epoch;
        self.queue.push(from);
        let base = g.base();
        let mut head = 0;
        while head < self.queue.len() {
            let v = self.queue[head];
            head += 1;
            for &(w, e) in base.out_adjacency(v) {
                if self.stamp[w.index()] != epoch && g.has_edge(e) {
                    if w == to {
                        return true;
                    }
                    self.stamp[w.index()] = epoch;
                    self.queue.push(w);
                }
            }
        }
        false
    }
}

fn degrees(g: &DirectedGraph, set: &EdgeSet) -> (Vec<usize>, Vec<usize>) {
    let mut out = vec![0; g.n()];
    let mut inn = vec![0; g.n()];
    for e in set.iter() {
        let (u, v) = g.edge(e);
        out[u.index()] += 1;
        inn[v.index()] += 1;
    }
    (out, inn)
}

/// Inclusion-minimal 2-vertex-connected spanning edge set, found by
/// visiting edges in `order` and dropping each one whose removal keeps the
/// graph 2-vertex-connected.
pub fn minimal_2vcs(g: &DirectedGraph, order: EdgeOrder) -> Result<EdgeSet, SparsifyError> {
    if !is_2_vertex_connected(g) {
        return Err(SparsifyError::Not2VertexConnected);
    }
    let mut keep = g.full_edge_set();
    let (mut out, mut inn) = degrees(g, &keep);
    let mut reach = Reach::new(g.n());
    for e in order.permutation(g.m()) {
        let (u, v) = g.edge(e);
        // 2-vertex-connectivity needs in- and out-degree >= 2 everywhere.
        if out[u.index()] <= 2 || inn[v.index()] <= 2 {
            continue;
        }
        keep.remove(e);
        // The current set is 2VC, so G - e - x stays strongly connected
        // iff u still reaches v in it. Deleting u or v removes e anyway.
        let removable = {
            let view = EdgeSubgraphView::new(g, &keep);
            reach.path(&view, u, v, None)
                && g.vertices()
                    .filter(|&x| x != u && x != v)
                    .all(|x| reach.path(&view, u, v, Some(x)))
        };
        if removable {
            out[u.index()] -= 1;
            inn[v.index()] -= 1;
        } else {
            keep.insert(e);
        }
    }
    Ok(keep)
}

/// Inclusion-minimal 2-vertex-twinless connected spanning edge set by
/// greedy deletion in `order`.
pub fn minimal_2vtcs(g: &DirectedGraph, order: EdgeOrder) -> Result<EdgeSet, SparsifyError> {
    if let Verdict::Fail(c) = verify_2vtc(g) {
        return Err(SparsifyError::InputNot2Vtc(c));
    }
    let mut keep = g.full_edge_set();
    let (mut out, mut inn) = degrees(g, &keep);
    for e in order.permutation(g.m()) {
        let (u, v) = g.edge(e);
        if out[u.index()] <= 2 || inn[v.index()] <= 2 {
            continue;
        }
        keep.remove(e);
        if is_2_vertex_twinless_connected(&EdgeSubgraphView::new(g, &keep)) {
            out[u.index()] -= 1;
            inn[v.index()] -= 1;
        } else {
            keep.insert(e);
        }
    }
    Ok(keep)
}

/// Lexicographically smallest edge of `g` outside `e2t`, avoiding `x`,
/// whose endpoints lie in different components of `partition`.
pub fn pick_cross_edge(
    g: &DirectedGraph,
    e2t: &EdgeSet,
    x: VertexId,
    partition: &TsccPartition,
) -> Result<EdgeId, SparsifyError> {
    g.edge_ids()
        .find(|&e| {
            let (v, w) = g.edge(e);
            !e2t.contains(e)
                && v != x
                && w != x
                && partition.component(v).is_some()
                && partition.component(v) != partition.component(w)
        })
        .ok_or(SparsifyError::NoCrossEdge { x })
}

/// Augments the 2-vertex-connected set `e2v` until every vertex deletion
/// leaves a twinless strongly connected graph.
pub fn augment_to_2vtc(g: &DirectedGraph, e2v: &EdgeSet) -> Result<SparsifyResult, SparsifyError> {
    if let Verdict::Fail(c) = verify_2vtc(g) {
        return Err(SparsifyError::InputNot2Vtc(c));
    }
    augment_checked(g, e2v.clone())
}

fn augment_checked(g: &DirectedGraph, e2v: EdgeSet) -> Result<SparsifyResult, SparsifyError> {
    if e2v.capacity() != g.m() {
        return Err(GraphError::EdgeNotInBase.into());
    }
    let taps = {
        let view = EdgeSubgraphView::new(g, &e2v);
        if !is_2_vertex_connected(&view) {
            return Err(SparsifyError::Not2VertexConnected);
        }
        // 2-vertex-connected on >= 3 vertices implies twinless strongly connected.
        twinless_articulation_points(&view).map_err(|_| SparsifyError::Not2VertexConnected)?
    };

    let mut e2t = e2v.clone();
    let mut steps = Vec::new();
    let components_without = |set: &EdgeSet, x: VertexId| {
        twinless_sccs(&VertexDeletedView::new(&EdgeSubgraphView::new(g, set), x))
    };
    for &x in &taps {
        let mut partition = components_without(&e2t, x);
        while partition.count() > 1 {
            let e = pick_cross_edge(g, &e2t, x, &partition)?;
            e2t.insert(e);
            let next = components_without(&e2t, x);
            if next.count() >= partition.count() {
                return Err(SparsifyError::NoProgress { x });
            }
            steps.push(AugmentationStep {
                tap: x,
                edge: e,
                components_before: partition.count(),
                components_after: next.count(),
            });
            partition = next;
        }
    }

    let verdict = verify_2vtc(&EdgeSubgraphView::new(g, &e2t));
    Ok(SparsifyResult {
        n: g.n(),
        m: g.m(),
        e2v,
        e2t,
        taps_of_e2v: taps,
        added_edges: steps,
        verdict,
    })
}

/// The full pipeline with the default lexicographic edge order.
pub fn approx_m2vtcs(g: &DirectedGraph) -> Result<SparsifyResult, SparsifyError> {
    approx_m2vtcs_with_order(g, EdgeOrder::Lexicographic)
}

pub fn approx_m2vtcs_with_order(
    g: &DirectedGraph,
    order: EdgeOrder,
) -> Result<SparsifyResult, SparsifyError> {
    if let Verdict::Fail(c) = verify_2vtc(g) {
        return Err(SparsifyError::InputNot2Vtc(c));
    }
    let e2v = minimal_2vcs(g, order)?;
    augment_checked(g, e2v)
}
