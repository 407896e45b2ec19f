use std::collections::VecDeque;

use super::bridges::bridge_flags;
use super::scc::{canonicalize, group_members, strongly_connected_components, SccPartition};
use crate::graph::{Digraph, PairKind, UndirectedCollapse, VertexId};

const NONE: usize = usize::MAX;

/// An edge of a component tree: two twinless components of one SCC joined
/// by an antiparallel pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TreeEdge {
    pub scc: usize,
    /// Twinless component ids, smaller first.
    pub components: (usize, usize),
    /// The antiparallel pair realizing the edge, smaller vertex first.
    pub pair: (VertexId, VertexId),
    pub kind: PairKind,
}

/// Twinless strongly connected components.
///
/// Inside each SCC, the twinless components are the 2-edge-connected
/// components of the SCC's underlying collapse; the bridges of that collapse
/// form the SCC's component tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TsccPartition {
    ids: Vec<usize>,
    count: usize,
    scc: SccPartition,
    tree: Vec<TreeEdge>,
}

impl TsccPartition {
    pub fn component(&self, v: VertexId) -> Option<usize> {
        match self.ids[v.index()] {
            NONE => None,
            id => Some(id),
        }
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn same(&self, u: VertexId, v: VertexId) -> bool {
        let (a, b) = (self.ids[u.index()], self.ids[v.index()]);
        a != NONE && a == b
    }

    pub fn scc(&self) -> &SccPartition {
        &self.scc
    }

    pub fn members(&self) -> Vec<Vec<VertexId>> {
        group_members(&self.ids, self.count)
    }

    /// All component-tree edges, ordered by `(scc, components)`.
    pub fn tree_edges(&self) -> &[TreeEdge] {
        &self.tree
    }

    /// The component tree of one SCC.
    pub fn component_tree(&self, scc: usize) -> impl Iterator<Item = &TreeEdge> {
        self.tree.iter().filter(move |t| t.scc == scc)
    }
}

pub fn twinless_sccs<G: Digraph>(g: &G) -> TsccPartition {
    let scc = strongly_connected_components(g);
    let collapse = UndirectedCollapse::filtered(g, |u, v| scc.same(u, v));
    let is_bridge = bridge_flags(&collapse);

    let n = collapse.n();
    let mut ids = vec![NONE; n];
    let mut next = 0;
    let mut queue = VecDeque::new();
    for root in g.vertices() {
        if ids[root.index()] != NONE {
            continue;
        }
        ids[root.index()] = next;
        queue.push_back(root);
        while let Some(v) = queue.pop_front() {
            for &(w, e) in collapse.neighbors(v) {
                if !is_bridge[e] && ids[w.index()] == NONE {
                    ids[w.index()] = next;
                    queue.push_back(w);
                }
            }
        }
        next += 1;
    }
    // BFS from ascending roots already yields canonical ids.
    let count = canonicalize(&mut ids);
    debug_assert_eq!(count, next);

    let mut tree: Vec<TreeEdge> = collapse
        .edges()
        .iter()
        .zip(&is_bridge)
        .filter(|(_, &b)| b)
        .map(|(e, _)| {
            let (a, b) = (ids[e.u.index()], ids[e.v.index()]);
            TreeEdge {
                scc: scc.component(e.u).expect("visible vertex"),
                components: (a.min(b), a.max(b)),
                pair: (e.u, e.v),
                kind: e.kind,
            }
        })
        .collect();
    tree.sort_unstable_by_key(|t| (t.scc, t.components, t.pair));
    debug_assert!(
        tree.iter().all(|t| t.kind == PairKind::Twin),
        "a bridge inside an SCC must be an antiparallel pair"
    );

    TsccPartition {
        ids,
        count,
        scc,
        tree,
    }
}

/// True iff the view has at least one vertex and forms a single twinless
/// strongly connected component.
pub fn is_twinless_strongly_connected<G: Digraph>(g: &G) -> bool {
    if !super::scc::is_strongly_connected(g) {
        return false;
    }
    // Strongly connected, so the collapse is connected and one twinless
    // component means no bridge.
    let collapse = UndirectedCollapse::new(g);
    !bridge_flags(&collapse).into_iter().any(|b| b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::DirectedGraph;

    fn v(i: usize) -> VertexId {
        VertexId::new(i)
    }

    #[test]
    fn bidirected_pair_is_two_components() {
        let g = DirectedGraph::from_edge_list(2, &[(0, 1), (1, 0)]).unwrap();
        let p = twinless_sccs(&g);
        assert_eq!(p.count(), 2);
        assert_eq!(p.scc().count(), 1);
        assert_eq!(
            p.tree_edges(),
            &[TreeEdge {
                scc: 0,
                components: (0, 1),
                pair: (v(0), v(1)),
                kind: PairKind::Twin,
            }]
        );
        assert!(!is_twinless_strongly_connected(&g));
    }

    #[test]
    fn directed_triangle_is_one_component() {
        let g = DirectedGraph::from_edge_list(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(twinless_sccs(&g).count(), 1);
        assert!(is_twinless_strongly_connected(&g));
    }

    #[test]
    fn single_vertex_and_empty_view() {
        let g = DirectedGraph::from_edge_list(1, &[]).unwrap();
        assert!(is_twinless_strongly_connected(&g));
        let empty = g.delete_vertex(v(0)).unwrap();
        assert!(!is_twinless_strongly_connected(&empty));
        assert_eq!(twinless_sccs(&empty).count(), 0);
    }

    #[test]
    fn components_never_cross_sccs() {
        // Two directed triangles joined by a one-way edge: the collapse is
        // 2-edge-connected only within each triangle.
        let g = DirectedGraph::from_edge_list(
            6,
            &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (2, 3)],
        )
        .unwrap();
        let p = twinless_sccs(&g);
        assert_eq!(p.count(), 2);
        assert!(p.tree_edges().is_empty());
        assert!(!is_twinless_strongly_connected(&g));
    }

    #[test]
    fn twin_bridge_between_cycles() {
        // Two directed triangles joined by an antiparallel pair 2<->3.
        let g = DirectedGraph::from_edge_list(
            6,
            &[
                (0, 1),
                (1, 2),
                (2, 0),
                (3, 4),
                (4, 5),
                (5, 3),
                (2, 3),
                (3, 2),
            ],
        )
        .unwrap();
        let p = twinless_sccs(&g);
        assert_eq!(p.scc().count(), 1);
        assert_eq!(p.count(), 2);
        assert_eq!(p.component_tree(0).count(), 1);
        assert_eq!(p.tree_edges()[0].pair, (v(2), v(3)));
        assert!(p.same(v(0), v(2)));
        assert!(!p.same(v(2), v(3)));
    }
}
