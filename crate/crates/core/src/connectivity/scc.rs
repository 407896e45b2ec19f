use std::collections::VecDeque;

use crate::graph::{Digraph, VertexId};

const NONE: usize = usize::MAX;

/// Strongly connected components of the visible vertices.
///
/// Ids are canonical: scanning vertices in ascending order, each new
/// component gets the next id, so the component of the lowest vertex is 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SccPartition {
    ids: Vec<usize>,
    count: usize,
}

impl SccPartition {
    /// Component of `v`, or `None` if the view hides `v`.
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

    /// Members of every component, ascending.
    pub fn members(&self) -> Vec<Vec<VertexId>> {
        group_members(&self.ids, self.count)
    }
}

pub(crate) fn group_members(ids: &[usize], count: usize) -> Vec<Vec<VertexId>> {
    let mut groups = vec![Vec::new(); count];
    for (v, &id) in ids.iter().enumerate() {
        if id != NONE {
            groups[id].push(VertexId::new(v));
        }
    }
    groups
}

/// Relabels raw component ids so they appear in ascending vertex order.
pub(crate) fn canonicalize(ids: &mut [usize]) -> usize {
    let mut remap: Vec<usize> = Vec::new();
    let mut next = 0;
    for id in ids.iter_mut().filter(|id| **id != NONE) {
        if *id >= remap.len() {
            remap.resize(*id + 1, NONE);
        }
        if remap[*id] == NONE {
            remap[*id] = next;
            next += 1;
        }
        *id = remap[*id];
    }
    next
}

/// Iterative Tarjan over whatever the view exposes.
pub fn strongly_connected_components<G: Digraph>(g: &G) -> SccPartition {
    let base = g.base();
    let n = base.n();
    let mut index = vec![NONE; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut ids = vec![NONE; n];
    let mut stack: Vec<VertexId> = Vec::new();
    let mut call: Vec<(VertexId, usize)> = Vec::new();
    let mut counter = 0;
    let mut raw = 0;

    for root in g.vertices() {
        if index[root.index()] != NONE {
            continue;
        }
        index[root.index()] = counter;
        low[root.index()] = counter;
        counter += 1;
        stack.push(root);
        on_stack[root.index()] = true;
        call.push((root, 0));

        while let Some(frame) = call.last_mut() {
            let v = frame.0;
            let adj = base.out_adjacency(v);
            if frame.1 < adj.len() {
                let (w, e) = adj[frame.1];
                frame.1 += 1;
                if !g.has_edge(e) {
                    continue;
                }
                let wi = w.index();
                if index[wi] == NONE {
                    index[wi] = counter;
                    low[wi] = counter;
                    counter += 1;
                    stack.push(w);
                    on_stack[wi] = true;
                    call.push((w, 0));
                } else if on_stack[wi] {
                    low[v.index()] = low[v.index()].min(index[wi]);
                }
            } else {
                call.pop();
                let vi = v.index();
                if let Some(&(parent, _)) = call.last() {
                    low[parent.index()] = low[parent.index()].min(low[vi]);
                }
                if low[vi] == index[vi] {
                    loop {
                        let w = stack.pop().expect("tarjan stack underflow");
                        on_stack[w.index()] = false;
                        ids[w.index()] = raw;
                        if w == v {
                            break;
                        }
                    }
                    raw += 1;
                }
            }
        }
    }
    let count = canonicalize(&mut ids);
    SccPartition { ids, count }
}

/// Breadth-first reachability from `source`, following edges forward or
/// backward.
pub(crate) fn reachable<G: Digraph>(g: &G, source: VertexId, forward: bool) -> Vec<bool> {
    let base = g.base();
    let mut seen = vec![false; base.n()];
    let mut queue = VecDeque::new();
    seen[source.index()] = true;
    queue.push_back(source);
    while let Some(v) = queue.pop_front() {
        let adj = if forward {
            base.out_adjacency(v)
        } else {
            base.in_adjacency(v)
        };
        for &(w, e) in adj {
            if !seen[w.index()] && g.has_edge(e) {
                seen[w.index()] = true;
                queue.push_back(w);
            }
        }
    }
    seen
}

/// A pair `(u, v)` with `v` unreachable from `u`, or `None` if the view is
/// strongly connected. An empty view has no pair and is reported as such
/// by [`is_strongly_connected`] instead.
pub fn unreachable_pair<G: Digraph>(g: &G) -> Option<(VertexId, VertexId)> {
    let root = g.vertices().next()?;
    let fwd = reachable(g, root, true);
    if let Some(v) = g.vertices().find(|v| !fwd[v.index()]) {
        return Some((root, v));
    }
    let bwd = reachable(g, root, false);
    g.vertices().find(|v| !bwd[v.index()]).map(|v| (v, root))
}

/// True iff the view has at least one vertex and every vertex reaches
/// every other.
pub fn is_strongly_connected<G: Digraph>(g: &G) -> bool {
    g.vertex_count() > 0 && unreachable_pair(g).is_none()
}
