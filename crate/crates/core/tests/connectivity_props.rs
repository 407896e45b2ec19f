use proptest::prelude::*;
use twinless::io::{parse_edge_list, write_edge_list};
use twinless::{
    collapse_underlying, is_2_vertex_connected, is_2_vertex_twinless_connected,
    is_strongly_connected, is_twinless_strongly_connected, strong_articulation_points,
    strongly_connected_components, tsc_oracle, twinless_articulation_points, twinless_sccs,
    DirectedGraph, PairKind, VertexDeletedView, VertexId,
};

fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (0..n).map(move |v| (u, v)))
        .filter(|(u, v)| u != v)
        .collect()
}

fn digraph(max_n: usize) -> impl Strategy<Value = DirectedGraph> {
    (1..=max_n, 0.1f64..0.9).prop_flat_map(|(n, p)| {
        let pairs = all_pairs(n);
        prop::collection::vec(prop::bool::weighted(p), pairs.len()).prop_map(move |mask| {
            let chosen: Vec<_> = pairs
                .iter()
                .zip(mask)
                .filter(|(_, keep)| *keep)
                .map(|(&e, _)| e)
                .collect();
            DirectedGraph::from_edge_list(n, &chosen).unwrap()
        })
    })
}

/// Transitive closure by repeated relaxation, over the vertices of `g`
/// minus `skip`.
fn closure(g: &DirectedGraph, skip: Option<usize>) -> Vec<Vec<bool>> {
    let n = g.n();
    let mut r = vec![vec![false; n]; n];
    for (i, row) in r.iter_mut().enumerate() {
        row[i] = true;
    }
    for &(u, v) in g.edges() {
        if skip != Some(u.index()) && skip != Some(v.index()) {
            r[u.index()][v.index()] = true;
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if r[i][k] && r[k][j] {
                    r[i][j] = true;
                }
            }
        }
    }
    r
}

fn naive_sc(g: &DirectedGraph, skip: Option<usize>) -> bool {
    let r = closure(g, skip);
    let live: Vec<usize> = (0..g.n()).filter(|&v| Some(v) != skip).collect();
    !live.is_empty() && live.iter().all(|&a| live.iter().all(|&b| r[a][b]))
}

#[test]
fn oracle_agrees_on_every_digraph_with_four_vertices() {
    let pairs = all_pairs(4);
    assert_eq!(pairs.len(), 12);
    let mut tsc = 0;
    for mask in 0u32..1 << 12 {
        let chosen: Vec<_> = (0..12)
            .filter(|b| mask >> b & 1 == 1)
            .map(|b| pairs[b])
            .collect();
        let g = DirectedGraph::from_edge_list(4, &chosen).unwrap();
        let fast = is_twinless_strongly_connected(&g);
        assert_eq!(fast, tsc_oracle(&g), "disagreement on {chosen:?}");
        tsc += usize::from(fast);
    }
    assert!(tsc > 0);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn oracle_agrees_on_random_digraphs(g in digraph(7)) {
        prop_assert_eq!(is_twinless_strongly_connected(&g), tsc_oracle(&g));
        for x in g.vertices() {
            let view = VertexDeletedView::new(&g, x);
            prop_assert_eq!(is_twinless_strongly_connected(&view), tsc_oracle(&view));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn collapse_counts(g in digraph(8)) {
        let c = collapse_underlying(&g);
        let mut unordered: Vec<_> = g.edges().iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        unordered.sort();
        unordered.dedup();
        prop_assert_eq!(c.edges().len(), unordered.len());
        let twins = g.edges().iter().filter(|&&(u, v)| u < v && g.has_pair(v, u)).count();
        prop_assert_eq!(c.twin_count(), twins);
    }

    #[test]
    fn deletion_commutes_with_collapse(g in digraph(8), pick in any::<prop::sample::Index>()) {
        let x = VertexId::new(pick.index(g.n()));
        let after = collapse_underlying(&VertexDeletedView::new(&g, x));
        let before = collapse_underlying(&g);
        let expected: Vec<_> = before
            .edges()
            .iter()
            .filter(|e| e.u != x && e.v != x)
            .copied()
            .collect();
        prop_assert_eq!(after.edges(), &expected[..]);
    }

    #[test]
    fn edge_list_round_trip(g in digraph(9)) {
        let text = write_edge_list(&g);
        let back = parse_edge_list(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(write_edge_list(&back), text);
    }

    #[test]
    fn tscc_refines_scc_and_trees_are_twin_trees(g in digraph(8)) {
        let p = twinless_sccs(&g);
        let scc = strongly_connected_components(&g);
        prop_assert_eq!(p.scc(), &scc);
        for u in g.vertices() {
            for v in g.vertices() {
                if p.same(u, v) {
                    prop_assert!(scc.same(u, v));
                }
            }
        }
        // Within each SCC: (#tscc - 1) tree edges, and they connect all of
        // the SCC's twinless components.
        for s in 0..scc.count() {
            let comps: std::collections::BTreeSet<usize> = g
                .vertices()
                .filter(|&v| scc.component(v) == Some(s))
                .map(|v| p.component(v).unwrap())
                .collect();
            let tree: Vec<_> = p.component_tree(s).collect();
            prop_assert_eq!(tree.len(), comps.len() - 1);
            let mut parent: std::collections::BTreeMap<usize, usize> =
                comps.iter().map(|&c| (c, c)).collect();
            fn find(parent: &mut std::collections::BTreeMap<usize, usize>, c: usize) -> usize {
                let p = parent[&c];
                if p == c { c } else { let r = find(parent, p); parent.insert(c, r); r }
            }
            for t in &tree {
                prop_assert_eq!(t.kind, PairKind::Twin);
                let (a, b) = t.pair;
                prop_assert!(g.has_pair(a, b) && g.has_pair(b, a));
                prop_assert_eq!(t.components, {
                    let (x, y) = (p.component(a).unwrap(), p.component(b).unwrap());
                    (x.min(y), x.max(y))
                });
                let (ra, rb) = (find(&mut parent, t.components.0), find(&mut parent, t.components.1));
                prop_assert_ne!(ra, rb, "component tree has a cycle");
                parent.insert(ra, rb);
            }
        }
    }

    #[test]
    fn strong_articulation_points_match_closure(g in digraph(7)) {
        prop_assert_eq!(is_strongly_connected(&g), naive_sc(&g, None));
        if let Ok(saps) = strong_articulation_points(&g) {
            let naive: Vec<VertexId> = (0..g.n())
                .filter(|&x| !naive_sc(&g, Some(x)))
                .map(VertexId::new)
                .collect();
            prop_assert_eq!(&saps, &naive);
            prop_assert_eq!(is_2_vertex_connected(&g), saps.is_empty());
        }
    }

    #[test]
    fn saps_are_taps_on_tsc_graphs(g in digraph(8)) {
        if let Ok(taps) = twinless_articulation_points(&g) {
            let saps = strong_articulation_points(&g).unwrap();
            prop_assert!(saps.iter().all(|s| taps.contains(s)));
            prop_assert_eq!(is_2_vertex_twinless_connected(&g), taps.is_empty());
            if is_2_vertex_twinless_connected(&g) {
                prop_assert!(is_2_vertex_connected(&g));
            }
        }
    }

    #[test]
    fn adding_an_edge_keeps_tsc(g in digraph(8), pick in any::<prop::sample::Index>()) {
        let absent: Vec<_> = all_pairs(g.n())
            .into_iter()
            .filter(|&(u, v)| !g.has_pair(u.into(), v.into()))
            .collect();
        prop_assume!(!absent.is_empty());
        let extra = absent[pick.index(absent.len())];
        let bigger = g.with_added_pairs(&[extra]).unwrap();
        if is_twinless_strongly_connected(&g) {
            prop_assert!(is_twinless_strongly_connected(&bigger));
        }
        if is_2_vertex_twinless_connected(&g) {
            prop_assert!(is_2_vertex_twinless_connected(&bigger));
        }
    }
}
