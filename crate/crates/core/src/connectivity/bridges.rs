use crate::graph::{UndirectedCollapse, VertexId};

const UNSEEN: usize = usize::MAX;

/// Per-edge bridge flags for a collapse, indexed like `collapse.edges()`.
pub(crate) fn bridge_flags(c: &UndirectedCollapse) -> Vec<bool> {
    let n = c.n();
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0usize; n];
    let mut is_bridge = vec![false; c.edges().len()];
    // (vertex, edge used to enter it, next neighbor position)
    let mut stack: Vec<(VertexId, usize, usize)> = Vec::new();
    let mut time = 0;

    for root in (0..n).map(VertexId::new) {
        if !c.has_vertex(root) || disc[root.index()] != UNSEEN {
            continue;
        }
        disc[root.index()] = time;
        low[root.index()] = time;
        time += 1;
        stack.push((root, UNSEEN, 0));

        while let Some(frame) = stack.last_mut() {
            let (v, via, pos) = *frame;
            let nbrs = c.neighbors(v);
            if pos < nbrs.len() {
                frame.2 += 1;
                let (w, e) = nbrs[pos];
                if e == via {
                    continue;
                }
                if disc[w.index()] == UNSEEN {
                    disc[w.index()] = time;
                    low[w.index()] = time;
                    time += 1;
                    stack.push((w, e, 0));
                } else {
                    low[v.index()] = low[v.index()].min(disc[w.index()]);
                }
            } else {
                stack.pop();
                if let Some(&(parent, _, _)) = stack.last() {
                    let (p, vi) = (parent.index(), v.index());
                    low[p] = low[p].min(low[vi]);
                    if low[vi] > disc[p] {
                        is_bridge[via] = true;
                    }
                }
            }
        }
    }
    is_bridge
}

/// Undirected edges whose removal increases the number of connected
/// components, as `(u, v)` with `u < v`, ascending.
pub fn bridges(c: &UndirectedCollapse) -> Vec<(VertexId, VertexId)> {
    bridge_flags(c)
        .iter()
        .zip(c.edges())
        .filter(|(&b, _)| b)
        .map(|(_, e)| (e.u, e.v))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{collapse_underlying, DirectedGraph};

    fn v(i: usize) -> VertexId {
        VertexId::new(i)
    }

    #[test]
    fn path_edges_are_bridges() {
        let g = DirectedGraph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(
            bridges(&collapse_underlying(&g)),
            vec![(v(0), v(1)), (v(1), v(2))]
        );
    }

    #[test]
    fn triangle_has_none() {
        let g = DirectedGraph::from_edge_list(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(bridges(&collapse_underlying(&g)).is_empty());
    }

    #[test]
    fn bowtie_keeps_cycles_and_finds_link() {
        // two triangles joined by the edge 2-3
        let g = DirectedGraph::from_edge_list(
            6,
            &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (2, 3)],
        )
        .unwrap();
        assert_eq!(bridges(&collapse_underlying(&g)), vec![(v(2), v(3))]);
    }

    #[test]
    fn twin_pairs_count_once() {
        // A bidirected pair collapses to one undirected edge, which is a bridge.
        let g = DirectedGraph::from_edge_list(2, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(bridges(&collapse_underlying(&g)), vec![(v(0), v(1))]);
    }
}
