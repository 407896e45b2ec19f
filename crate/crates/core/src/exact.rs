//! Exact desk-scale solvers and an independent twinless-connectivity oracle.
//!
//! The solvers try cardinalities `k = 2n, 2n + 1, ...` and, for each `k`,
//! run a depth-first include/exclude search over the edges in
//! lexicographic order. Both targets are monotone under edge addition, so
//! the set of still-available edges is kept feasible at every node and any
//! exclusion that breaks feasibility is cut immediately. Degree deficits
//! (every vertex needs in- and out-degree 2) bound the remaining cost.
//! Including before excluding makes the first size-`k` hit the
//! lexicographically smallest optimal edge sequence.

use std::time::{Duration, Instant};

use crate::connectivity::{is_2_vertex_connected, is_2_vertex_twinless_connected};
use crate::error::ExactError;
use crate::graph::{Digraph, DirectedGraph, EdgeId, EdgeSet, EdgeSubgraphView, VertexId};
use crate::sparsify::{approx_m2vtcs, ratio_ceiling, verify_2vtc, Verdict};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SearchBudget {
    pub max_nodes: u64,
    pub max_seconds: f64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self {
            max_nodes: 100_000_000,
            max_seconds: 300.0,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Target {
    TwoVertexConnected,
    TwoVertexTwinlessConnected,
}

impl Target {
    pub fn holds<G: Digraph>(self, g: &G) -> bool {
        match self {
            Target::TwoVertexConnected => is_2_vertex_connected(g),
            Target::TwoVertexTwinlessConnected => is_2_vertex_twinless_connected(g),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactResult {
    /// Size of `optimum_edges`; when not proven, the best size found so far.
    pub optimum_size: usize,
    pub optimum_edges: EdgeSet,
    /// Search nodes over all cardinalities tried.
    pub nodes_explored: u64,
    /// Whether no smaller feasible set exists.
    pub proven: bool,
    /// Every cardinality below this one is proven infeasible.
    pub lower_bound: usize,
}

enum Stop {
    Budget,
}

struct Search<'a> {
    g: &'a DirectedGraph,
    target: Target,
    k: usize,
    included: EdgeSet,
    available: EdgeSet,
    in_inc: Vec<usize>,
    out_inc: Vec<usize>,
    in_avail: Vec<usize>,
    out_avail: Vec<usize>,
    nodes: u64,
    budget: SearchBudget,
    deadline: Instant,
}

impl Search<'_> {
    fn tick(&mut self) -> Result<(), Stop> {
        self.nodes += 1;
        if self.nodes > self.budget.max_nodes {
            return Err(Stop::Budget);
        }
        if self.nodes.is_multiple_of(1024) && Instant::now() >= self.deadline {
            return Err(Stop::Budget);
        }
        Ok(())
    }

    fn deficit(&self) -> usize {
        let need = |deg: &[usize]| deg.iter().map(|&d| 2usize.saturating_sub(d)).sum::<usize>();
        need(&self.in_inc).max(need(&self.out_inc))
    }

    /// Searches edges `i..` for a feasible set of exactly `k` edges. On
    /// success `available` holds the answer.
    fn dfs(&mut self, i: usize) -> Result<bool, Stop> {
        self.tick()?;
        // Invariant: `available` is feasible.
        if self.available.len() == self.k {
            return Ok(true);
        }
        if self.available.len() < self.k || i == self.g.m() {
            return Ok(false);
        }
        if self.included.len() + self.deficit() > self.k {
            return Ok(false);
        }
        let e = EdgeId::new(i);
        let (u, v) = self.g.edge(e);

        self.included.insert(e);
        self.out_inc[u.index()] += 1;
        self.in_inc[v.index()] += 1;
        let found = self.dfs(i + 1)?;
        self.included.remove(e);
        self.out_inc[u.index()] -= 1;
        self.in_inc[v.index()] -= 1;
        if found {
            return Ok(true);
        }

        if self.out_avail[u.index()] <= 2 || self.in_avail[v.index()] <= 2 {
            return Ok(false);
        }
        self.available.remove(e);
        if self
            .target
            .holds(&EdgeSubgraphView::new(self.g, &self.available))
        {
            self.out_avail[u.index()] -= 1;
            self.in_avail[v.index()] -= 1;
            let found = self.dfs(i + 1)?;
            if found {
                return Ok(true);
            }
            self.out_avail[u.index()] += 1;
            self.in_avail[v.index()] += 1;
        }
        self.available.insert(e);
        Ok(false)
    }
}

fn solve(
    g: &DirectedGraph,
    target: Target,
    budget: SearchBudget,
) -> Result<ExactResult, ExactError> {
    let n = g.n();
    let m = g.m();
    let mut out_all = vec![0usize; n];
    let mut in_all = vec![0usize; n];
    for &(u, v) in g.edges() {
        out_all[u.index()] += 1;
        in_all[v.index()] += 1;
    }
    let start = Instant::now();
    let deadline = start + Duration::from_secs_f64(budget.max_seconds.max(0.0));
    let mut nodes = 0u64;
    // Every feasible set has in- and out-degree >= 2 at each vertex.
    let first = (2 * n).min(m);
    for k in first..=m {
        let mut search = Search {
            g,
            target,
            k,
            included: EdgeSet::empty(m),
            available: g.full_edge_set(),
            in_inc: vec![0; n],
            out_inc: vec![0; n],
            in_avail: in_all.clone(),
            out_avail: out_all.clone(),
            nodes,
            budget,
            deadline,
        };
        let outcome = search.dfs(0);
        nodes = search.nodes;
        match outcome {
            Ok(true) => {
                debug_assert!(target.holds(&EdgeSubgraphView::new(g, &search.available)));
                return Ok(ExactResult {
                    optimum_size: k,
                    optimum_edges: search.available,
                    nodes_explored: nodes,
                    proven: true,
                    lower_bound: k,
                });
            }
            Ok(false) => {}
            Err(Stop::Budget) => {
                return Err(ExactError::BudgetExceeded {
                    partial: Box::new(ExactResult {
                        optimum_size: m,
                        optimum_edges: g.full_edge_set(),
                        nodes_explored: nodes,
                        proven: false,
                        lower_bound: k,
                    }),
                });
            }
        }
    }
    unreachable!("the full edge set is feasible")
}

/// Minimum-cardinality 2-vertex-connected spanning edge set.
pub fn exact_min_2vcs(g: &DirectedGraph, budget: SearchBudget) -> Result<ExactResult, ExactError> {
    if !is_2_vertex_connected(g) {
        return Err(ExactError::Not2VertexConnected);
    }
    solve(g, Target::TwoVertexConnected, budget)
}

/// Minimum-cardinality 2-vertex-twinless connected spanning edge set.
pub fn exact_min_2vtcs(g: &DirectedGraph, budget: SearchBudget) -> Result<ExactResult, ExactError> {
    if let Verdict::Fail(c) = verify_2vtc(g) {
        return Err(ExactError::InputNot2Vtc(c));
    }
    solve(g, Target::TwoVertexTwinlessConnected, budget)
}

#[derive(Clone, Debug, PartialEq)]
pub struct RatioRecord {
    pub approx_size: usize,
    pub optimum: usize,
    pub a_t: usize,
    pub ratio: f64,
    /// `2 + a_t / 2`.
    pub ceiling: f64,
    pub within_ceiling: bool,
}

/// Compares the pipeline's output size with the exact optimum.
pub fn approximation_ratio(
    g: &DirectedGraph,
    budget: SearchBudget,
) -> Result<RatioRecord, ExactError> {
    let approx = approx_m2vtcs(g)?;
    let exact = exact_min_2vtcs(g, budget)?;
    let ratio = approx.e2t.len() as f64 / exact.optimum_size as f64;
    let ceiling = ratio_ceiling(approx.a_t());
    Ok(RatioRecord {
        approx_size: approx.e2t.len(),
        optimum: exact.optimum_size,
        a_t: approx.a_t(),
        ratio,
        ceiling,
        within_ceiling: ratio <= ceiling,
    })
}

/// Twinless strong connectivity decided from its definition: is there a
/// spanning strongly connected edge subset that keeps at most one edge of
/// every antiparallel pair? Returns such a subset if so.
///
/// Only reachability is used, never bridges or components, so this stays
/// independent of [`crate::connectivity::is_twinless_strongly_connected`].
pub fn tsc_witness_oracle<G: Digraph>(g: &G) -> Option<EdgeSet> {
    let base = g.base();
    let vertices: Vec<VertexId> = g.vertices().collect();
    let root = *vertices.first()?;

    // slot[e] = Some((pair index, side)) for edges in a visible twin pair.
    let mut slot: Vec<Option<(usize, u8)>> = vec![None; base.m()];
    let mut pairs = 0;
    for e in g.edge_ids() {
        let (u, v) = base.edge(e);
        if u < v {
            if let Some(r) = base.find_edge(v, u).filter(|&r| g.has_edge(r)) {
                slot[e.index()] = Some((pairs, 1));
                slot[r.index()] = Some((pairs, 2));
                pairs += 1;
            }
        }
    }

    // choice[p]: 0 keeps both directions (undecided), 1 or 2 keeps one side.
    let mut choice = vec![0u8; pairs];
    let allowed = |choice: &[u8], e: EdgeId| {
        g.has_edge(e)
            && match slot[e.index()] {
                None => true,
                Some((p, side)) => choice[p] == 0 || choice[p] == side,
            }
    };
    let strongly_connected = |choice: &[u8]| {
        for forward in [true, false] {
            let mut seen = vec![false; base.n()];
            let mut stack = vec![root];
            seen[root.index()] = true;
            let mut count = 1;
            while let Some(v) = stack.pop() {
                let adj = if forward {
                    base.out_adjacency(v)
                } else {
                    base.in_adjacency(v)
                };
                for &(w, e) in adj {
                    if !seen[w.index()] && allowed(choice, e) {
                        seen[w.index()] = true;
                        count += 1;
                        stack.push(w);
                    }
                }
            }
            if count != vertices.len() {
                return false;
            }
        }
        true
    };

    fn branch(i: usize, choice: &mut Vec<u8>, sc: &dyn Fn(&[u8]) -> bool) -> bool {
        // Undecided pairs keep both edges, so failure here is final.
        if !sc(choice) {
            return false;
        }
        if i == choice.len() {
            return true;
        }
        for side in [1, 2] {
            choice[i] = side;
            if branch(i + 1, choice, sc) {
                return true;
            }
        }
        choice[i] = 0;
        false
    }

    if !branch(0, &mut choice, &strongly_connected) {
        return None;
    }
    Some(EdgeSet::from_ids(
        base.m(),
        g.edge_ids().filter(|&e| allowed(&choice, e)),
    ))
}

pub fn tsc_oracle<G: Digraph>(g: &G) -> bool {
    tsc_witness_oracle(g).is_some()
}
