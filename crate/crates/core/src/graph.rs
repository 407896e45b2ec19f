//! Simple directed graphs and the non-owning views the algorithms run on.
//!
//! A [`DirectedGraph`] stores its edges sorted lexicographically, so an
//! [`EdgeId`] is the rank of an edge in that order. Subgraphs are never
//! copied: a [`VertexDeletedView`] hides one vertex and an
//! [`EdgeSubgraphView`] keeps only the edges of an [`EdgeSet`]. Both are
//! constant-time to create and implement [`Digraph`] like the base graph does.

use std::fmt;

use crate::error::GraphError;

/// Dense vertex index in `[0, n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(u32);

impl VertexId {
    pub const fn new(index: usize) -> Self {
        Self(index as u32)
    }

    #[inline]
    pub const fn index(self) -> usize {
        self.0 as usize
    }
}

impl From<usize> for VertexId {
    fn from(index: usize) -> Self {
        Self::new(index)
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Rank of an edge in the lexicographic edge order of its base graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(u32);

impl EdgeId {
    pub const fn new(index: usize) -> Self {
        Self(index as u32)
    }

    #[inline]
    pub const fn index(self) -> usize {
        self.0 as usize
    }
}

/// An ordered pair `(tail, head)`.
pub type Edge = (VertexId, VertexId);

/// Immutable simple digraph: no self-loops, no parallel edges.
#[derive(Clone, PartialEq, Eq)]
pub struct DirectedGraph {
    n: usize,
    edges: Vec<Edge>,
    labels: Vec<u64>,
    // CSR adjacency: (neighbor, edge id), neighbors ascending.
    out_offsets: Vec<usize>,
    out_adj: Vec<(VertexId, EdgeId)>,
    in_offsets: Vec<usize>,
    in_adj: Vec<(VertexId, EdgeId)>,
}

impl fmt::Debug for DirectedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("DirectedGraph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}

impl DirectedGraph {
    /// Builds a graph on vertices `0..n`. Duplicate pairs are merged,
    /// self-loops and out-of-range endpoints are rejected.
    pub fn from_edge_list(n: usize, pairs: &[(usize, usize)]) -> Result<Self, GraphError> {
        Self::with_labels(n, pairs, (0..n as u64).collect())
    }

    /// Like [`from_edge_list`](Self::from_edge_list) but attaches an external
    /// label to every vertex. Labels must be strictly increasing so that the
    /// dense order and the label order agree.
    pub fn with_labels(
        n: usize,
        pairs: &[(usize, usize)],
        labels: Vec<u64>,
    ) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::EmptyGraph);
        }
        if n > u32::MAX as usize {
            return Err(GraphError::TooManyVertices(n));
        }
        if labels.len() != n {
            return Err(GraphError::LabelCount {
                expected: n,
                found: labels.len(),
            });
        }
        if labels.windows(2).any(|w| w[0] >= w[1]) {
            return Err(GraphError::UnsortedLabels);
        }
        let mut edges = Vec::with_capacity(pairs.len());
        for &(u, v) in pairs {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::EndpointOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            edges.push((VertexId::new(u), VertexId::new(v)));
        }
        edges.sort_unstable();
        edges.dedup();
        Ok(Self::from_sorted(n, edges, labels))
    }

    fn from_sorted(n: usize, edges: Vec<Edge>, labels: Vec<u64>) -> Self {
        let mut out_offsets = vec![0usize; n + 1];
        let mut in_offsets = vec![0usize; n + 1];
        for &(u, v) in &edges {
            out_offsets[u.index() + 1] += 1;
            in_offsets[v.index() + 1] += 1;
        }
        for i in 0..n {
            out_offsets[i + 1] += out_offsets[i];
            in_offsets[i + 1] += in_offsets[i];
        }
        let placeholder = (VertexId(0), EdgeId(0));
        let mut out_adj = vec![placeholder; edges.len()];
        let mut in_adj = vec![placeholder; edges.len()];
        let mut out_fill = out_offsets.clone();
        let mut in_fill = in_offsets.clone();
        // Edges are sorted by (u, v), so both adjacency lists come out sorted.
        for (i, &(u, v)) in edges.iter().enumerate() {
            let id = EdgeId::new(i);
            out_adj[out_fill[u.index()]] = (v, id);
            out_fill[u.index()] += 1;
            in_adj[in_fill[v.index()]] = (u, id);
            in_fill[v.index()] += 1;
        }
        Self {
            n,
            edges,
            labels,
            out_offsets,
            out_adj,
            in_offsets,
            in_adj,
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// All edges in lexicographic order; position `i` holds `EdgeId::new(i)`.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    #[inline]
    pub fn edge(&self, e: EdgeId) -> Edge {
        self.edges[e.index()]
    }

    pub fn edge_ids(&self) -> impl DoubleEndedIterator<Item = EdgeId> + ExactSizeIterator {
        (0..self.edges.len()).map(EdgeId::new)
    }

    pub fn vertices(&self) -> impl DoubleEndedIterator<Item = VertexId> + ExactSizeIterator {
        (0..self.n).map(VertexId::new)
    }

    /// Out-neighbors of `v` with the connecting edge ids, ascending by neighbor.
    #[inline]
    pub fn out_adjacency(&self, v: VertexId) -> &[(VertexId, EdgeId)] {
        &self.out_adj[self.out_offsets[v.index()]..self.out_offsets[v.index() + 1]]
    }

    #[inline]
    pub fn in_adjacency(&self, v: VertexId) -> &[(VertexId, EdgeId)] {
        &self.in_adj[self.in_offsets[v.index()]..self.in_offsets[v.index() + 1]]
    }

    pub fn find_edge(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        let adj = self.out_adjacency(u);
        adj.binary_search_by_key(&v, |&(w, _)| w)
            .ok()
            .map(|i| adj[i].1)
    }

    pub fn has_pair(&self, u: VertexId, v: VertexId) -> bool {
        self.find_edge(u, v).is_some()
    }

    /// External label of a vertex (identity unless the graph was parsed
    /// from a file with sparse or shifted labels).
    pub fn label(&self, v: VertexId) -> u64 {
        self.labels[v.index()]
    }

    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<(), GraphError> {
        if v.index() < self.n {
            Ok(())
        } else {
            Err(GraphError::EndpointOutOfRange {
                vertex: v.index(),
                n: self.n,
            })
        }
    }

    /// Hides `x` and every edge incident to it.
    pub fn delete_vertex(&self, x: VertexId) -> Result<VertexDeletedView<'_, Self>, GraphError> {
        self.check_vertex(x)?;
        Ok(VertexDeletedView::new(self, x))
    }

    /// Spanning subgraph keeping exactly the edges of `subset`.
    pub fn restrict_edges<'a>(
        &'a self,
        subset: &'a EdgeSet,
    ) -> Result<EdgeSubgraphView<'a>, GraphError> {
        if subset.capacity() != self.m() {
            return Err(GraphError::EdgeNotInBase);
        }
        Ok(EdgeSubgraphView::new(self, subset))
    }

    /// Edge set for a list of pairs, failing on any pair not in the graph.
    pub fn edge_set_of(&self, pairs: &[(usize, usize)]) -> Result<EdgeSet, GraphError> {
        let mut set = EdgeSet::empty(self.m());
        for &(u, v) in pairs {
            if u >= self.n || v >= self.n {
                return Err(GraphError::EdgeNotInBase);
            }
            let e = self
                .find_edge(VertexId::new(u), VertexId::new(v))
                .ok_or(GraphError::EdgeNotInBase)?;
            set.insert(e);
        }
        Ok(set)
    }

    /// Copies the edges of a set into a standalone graph with the same
    /// vertices and labels.
    pub fn subgraph(&self, subset: &EdgeSet) -> DirectedGraph {
        let edges = subset.iter().map(|e| self.edge(e)).collect();
        Self::from_sorted(self.n, edges, self.labels.clone())
    }

    /// The same vertices and labels with extra pairs merged in.
    pub fn with_added_pairs(&self, pairs: &[(usize, usize)]) -> Result<DirectedGraph, GraphError> {
        let mut all: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|&(u, v)| (u.index(), v.index()))
            .collect();
        all.extend_from_slice(pairs);
        Self::with_labels(self.n, &all, self.labels.clone())
    }

    pub fn full_edge_set(&self) -> EdgeSet {
        EdgeSet::full(self.m())
    }
}

/// A set of edge ids of one base graph.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct EdgeSet {
    bits: Vec<bool>,
    len: usize,
}

impl EdgeSet {
    pub fn empty(capacity: usize) -> Self {
        Self {
            bits: vec![false; capacity],
            len: 0,
        }
    }

    pub fn full(capacity: usize) -> Self {
        Self {
            bits: vec![true; capacity],
            len: capacity,
        }
    }

    pub fn from_ids(capacity: usize, ids: impl IntoIterator<Item = EdgeId>) -> Self {
        let mut set = Self::empty(capacity);
        for e in ids {
            set.insert(e);
        }
        set
    }

    /// Number of edge ids the set ranges over (the base graph's `m`).
    pub fn capacity(&self) -> usize {
        self.bits.len()
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn contains(&self, e: EdgeId) -> bool {
        self.bits[e.index()]
    }

    pub fn insert(&mut self, e: EdgeId) -> bool {
        let slot = &mut self.bits[e.index()];
        let fresh = !*slot;
        if fresh {
            *slot = true;
            self.len += 1;
        }
        fresh
    }

    pub fn remove(&mut self, e: EdgeId) -> bool {
        let slot = &mut self.bits[e.index()];
        let present = *slot;
        if present {
            *slot = false;
            self.len -= 1;
        }
        present
    }

    /// Ascending edge ids, hence lexicographic edge order.
    pub fn iter(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.bits
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(i, _)| EdgeId::new(i))
    }

    pub fn is_subset(&self, other: &EdgeSet) -> bool {
        self.bits.len() == other.bits.len()
            && self.bits.iter().zip(&other.bits).all(|(&a, &b)| !a || b)
    }

    /// Edges of the set as vertex pairs in lexicographic order.
    pub fn pairs(&self, g: &DirectedGraph) -> Vec<Edge> {
        self.iter().map(|e| g.edge(e)).collect()
    }
}

/// Read access shared by graphs and views.
///
/// Algorithms walk the base graph's adjacency and skip whatever the view
/// hides, so no view ever materializes a copy.
pub trait Digraph {
    fn base(&self) -> &DirectedGraph;

    fn has_vertex(&self, v: VertexId) -> bool;

    /// Whether edge `e` is visible. Implementations guarantee that a visible
    /// edge has both endpoints visible.
    fn has_edge(&self, e: EdgeId) -> bool;

    /// Number of visible vertices.
    fn vertex_count(&self) -> usize;

    fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.base().vertices().filter(|&v| self.has_vertex(v))
    }

    fn out_neighbors(&self, v: VertexId) -> impl Iterator<Item = (VertexId, EdgeId)> + '_ {
        self.base()
            .out_adjacency(v)
            .iter()
            .copied()
            .filter(|&(_, e)| self.has_edge(e))
    }

    fn in_neighbors(&self, v: VertexId) -> impl Iterator<Item = (VertexId, EdgeId)> + '_ {
        self.base()
            .in_adjacency(v)
            .iter()
            .copied()
            .filter(|&(_, e)| self.has_edge(e))
    }

    fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.base().edge_ids().filter(|&e| self.has_edge(e))
    }

    fn edge_count(&self) -> usize {
        self.edge_ids().count()
    }
}

impl Digraph for DirectedGraph {
    #[inline]
    fn base(&self) -> &DirectedGraph {
        self
    }

    #[inline]
    fn has_vertex(&self, v: VertexId) -> bool {
        v.index() < self.n
    }

    #[inline]
    fn has_edge(&self, _e: EdgeId) -> bool {
        true
    }

    fn vertex_count(&self) -> usize {
        self.n
    }

    fn edge_count(&self) -> usize {
        self.m()
    }
}

impl<G: Digraph> Digraph for &G {
    #[inline]
    fn base(&self) -> &DirectedGraph {
        (**self).base()
    }

    #[inline]
    fn has_vertex(&self, v: VertexId) -> bool {
        (**self).has_vertex(v)
    }

    #[inline]
    fn has_edge(&self, e: EdgeId) -> bool {
        (**self).has_edge(e)
    }

    fn vertex_count(&self) -> usize {
        (**self).vertex_count()
    }
}

/// The induced subgraph on all visible vertices but `removed`.
#[derive(Clone, Copy, Debug)]
pub struct VertexDeletedView<'a, G: ?Sized> {
    inner: &'a G,
    removed: VertexId,
}

impl<'a, G: Digraph> VertexDeletedView<'a, G> {
    /// `removed` must be a vertex of the base graph; the caller checks range.
    pub fn new(inner: &'a G, removed: VertexId) -> Self {
        Self { inner, removed }
    }

    pub fn removed(&self) -> VertexId {
        self.removed
    }
}

impl<G: Digraph> Digraph for VertexDeletedView<'_, G> {
    #[inline]
    fn base(&self) -> &DirectedGraph {
        self.inner.base()
    }

    #[inline]
    fn has_vertex(&self, v: VertexId) -> bool {
        v != self.removed && self.inner.has_vertex(v)
    }

    #[inline]
    fn has_edge(&self, e: EdgeId) -> bool {
        let (u, v) = self.inner.base().edge(e);
        u != self.removed && v != self.removed && self.inner.has_edge(e)
    }

    fn vertex_count(&self) -> usize {
        self.inner.vertex_count() - usize::from(self.inner.has_vertex(self.removed))
    }
}

/// Spanning subgraph `(V, subset)` of a base graph.
#[derive(Clone, Copy, Debug)]
pub struct EdgeSubgraphView<'a> {
    base: &'a DirectedGraph,
    subset: &'a EdgeSet,
}

impl<'a> EdgeSubgraphView<'a> {
    /// Panics if the set was built for a graph with a different edge count.
    pub fn new(base: &'a DirectedGraph, subset: &'a EdgeSet) -> Self {
        assert_eq!(base.m(), subset.capacity(), "edge set of another graph");
        Self { base, subset }
    }

    pub fn subset(&self) -> &'a EdgeSet {
        self.subset
    }
}

impl Digraph for EdgeSubgraphView<'_> {
    #[inline]
    fn base(&self) -> &DirectedGraph {
        self.base
    }

    #[inline]
    fn has_vertex(&self, v: VertexId) -> bool {
        v.index() < self.base.n()
    }

    #[inline]
    fn has_edge(&self, e: EdgeId) -> bool {
        self.subset.contains(e)
    }

    fn vertex_count(&self) -> usize {
        self.base.n()
    }

    fn edge_count(&self) -> usize {
        self.subset.len()
    }
}

/// Whether an undirected pair is realized by one or by both directed edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PairKind {
    Single,
    Twin,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct UndirectedEdge {
    /// Smaller endpoint.
    pub u: VertexId,
    /// Larger endpoint.
    pub v: VertexId,
    pub kind: PairKind,
}

/// Underlying undirected graph: one edge per unordered pair covered by at
/// least one visible directed edge, annotated with whether the pair is twin.
#[derive(Clone, Debug)]
pub struct UndirectedCollapse {
    n: usize,
    present: Vec<bool>,
    edges: Vec<UndirectedEdge>,
    offsets: Vec<usize>,
    // (neighbor, undirected edge index)
    adj: Vec<(VertexId, usize)>,
}

impl UndirectedCollapse {
    pub fn new<G: Digraph>(g: &G) -> Self {
        Self::filtered(g, |_, _| true)
    }

    /// Collapse of `g` keeping only pairs accepted by `keep(u, v)` (`u < v`).
    pub fn filtered<G: Digraph>(g: &G, mut keep: impl FnMut(VertexId, VertexId) -> bool) -> Self {
        let base = g.base();
        let n = base.n();
        let present: Vec<bool> = base.vertices().map(|v| g.has_vertex(v)).collect();
        let mut edges = Vec::new();
        for e in g.edge_ids() {
            let (a, b) = base.edge(e);
            let reverse = base.find_edge(b, a).filter(|&r| g.has_edge(r));
            // Each twin pair is emitted once, from its smaller tail.
            if reverse.is_some() && a > b {
                continue;
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            if !keep(u, v) {
                continue;
            }
            let kind = if reverse.is_some() {
                PairKind::Twin
            } else {
                PairKind::Single
            };
            edges.push(UndirectedEdge { u, v, kind });
        }
        edges.sort_unstable_by_key(|e| (e.u, e.v));

        let mut offsets = vec![0usize; n + 1];
        for e in &edges {
            offsets[e.u.index() + 1] += 1;
            offsets[e.v.index() + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let mut fill = offsets.clone();
        let mut adj = vec![(VertexId(0), 0usize); 2 * edges.len()];
        for (i, e) in edges.iter().enumerate() {
            adj[fill[e.u.index()]] = (e.v, i);
            fill[e.u.index()] += 1;
            adj[fill[e.v.index()]] = (e.u, i);
            fill[e.v.index()] += 1;
        }
        Self {
            n,
            present,
            edges,
            offsets,
            adj,
        }
    }

    /// Size of the vertex index space (the base graph's `n`).
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_vertex(&self, v: VertexId) -> bool {
        self.present[v.index()]
    }

    /// Undirected edges sorted by `(u, v)` with `u < v`.
    pub fn edges(&self) -> &[UndirectedEdge] {
        &self.edges
    }

    pub fn twin_count(&self) -> usize {
        self.edges
            .iter()
            .filter(|e| e.kind == PairKind::Twin)
            .count()
    }

    /// Neighbors of `v` with the index of the connecting undirected edge.
    pub fn neighbors(&self, v: VertexId) -> &[(VertexId, usize)] {
        &self.adj[self.offsets[v.index()]..self.offsets[v.index() + 1]]
    }

    pub fn kind_of(&self, u: VertexId, v: VertexId) -> Option<PairKind> {
        let (u, v) = if u < v { (u, v) } else { (v, u) };
        self.edges
            .binary_search_by_key(&(u, v), |e| (e.u, e.v))
            .ok()
            .map(|i| self.edges[i].kind)
    }
}

/// `collapse_underlying` as a free function for symmetry with the other
/// graph operations.
pub fn collapse_underlying<G: Digraph>(g: &G) -> UndirectedCollapse {
    UndirectedCollapse::new(g)
}
