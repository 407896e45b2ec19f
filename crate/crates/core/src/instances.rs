//! The three seven-vertex example graphs, with the figure's 1-based labels.
//!
//! `fig1a` is 2-vertex-twinless connected with 22 edges, `fig1b` is its
//! optimal 2-vertex-connected subgraph (a bidirected 7-cycle, 14 edges) and
//! `fig1c` its optimal 2-vertex-twinless connected subgraph (15 edges).

use crate::graph::DirectedGraph;

/// Edges of `fig1a` in figure labels. The first 14 are the seven
/// antiparallel pairs forming `fig1b`.
pub const FIG1A_EDGES: [(usize, usize); 22] = [
    (1, 2),
    (2, 1),
    (1, 5),
    (5, 1),
    (5, 7),
    (7, 5),
    (7, 6),
    (6, 7),
    (6, 4),
    (4, 6),
    (4, 3),
    (3, 4),
    (3, 2),
    (2, 3),
    (2, 5),
    (1, 7),
    (5, 6),
    (6, 3),
    (4, 2),
    (3, 1),
    (4, 5),
    (7, 4),
];

pub const FIG1C_EDGES: [(usize, usize); 15] = [
    (2, 5),
    (2, 1),
    (1, 5),
    (5, 7),
    (7, 6),
    (6, 4),
    (4, 3),
    (3, 2),
    (1, 7),
    (5, 6),
    (6, 3),
    (4, 2),
    (3, 1),
    (4, 5),
    (7, 4),
];

pub const BUILTIN_NAMES: [&str; 3] = ["fig1a", "fig1b", "fig1c"];

fn from_figure(pairs: &[(usize, usize)]) -> DirectedGraph {
    let dense: Vec<(usize, usize)> = pairs.iter().map(|&(u, v)| (u - 1, v - 1)).collect();
    DirectedGraph::with_labels(7, &dense, (1..=7).collect()).expect("builtin graph is well formed")
}

pub fn fig1a() -> DirectedGraph {
    from_figure(&FIG1A_EDGES)
}

pub fn fig1b() -> DirectedGraph {
    from_figure(&FIG1A_EDGES[..14])
}

pub fn fig1c() -> DirectedGraph {
    from_figure(&FIG1C_EDGES)
}

pub fn builtin(name: &str) -> Option<DirectedGraph> {
    match name {
        "fig1a" => Some(fig1a()),
        "fig1b" => Some(fig1b()),
        "fig1c" => Some(fig1c()),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!(fig1a().m(), 22);
        assert_eq!(fig1b().m(), 14);
        assert_eq!(fig1c().m(), 15);
        assert_eq!(fig1a().labels(), &[1, 2, 3, 4, 5, 6, 7]);
    }

    #[test]
    fn subgraphs_of_fig1a() {
        let a = fig1a();
        for sub in [fig1b(), fig1c()] {
            assert!(sub.edges().iter().all(|&(u, v)| a.has_pair(u, v)));
        }
    }

    #[test]
    fn fig1b_is_seven_twin_pairs() {
        let b = fig1b();
        assert!(b.edges().iter().all(|&(u, v)| b.has_pair(v, u)));
    }

    #[test]
    fn lookup() {
        assert!(builtin("fig1a").is_some());
        assert!(builtin("fig2").is_none());
    }
}
