use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use twinless::generate::{bidirected_cycle, twin_free_double_cycle};
use twinless::sparsify::size_bound;
use twinless::{
    approx_m2vtcs, approx_m2vtcs_with_order, exact_min_2vcs, exact_min_2vtcs,
    is_2_vertex_connected, is_2_vertex_twinless_connected, is_strongly_connected,
    is_twinless_strongly_connected, minimal_2vcs, minimal_2vtcs, twinless_sccs, verify_2vtc,
    DirectedGraph, EdgeOrder, EdgeSet, EdgeSubgraphView, SearchBudget, VertexDeletedView, VertexId,
};

/// A 2-vertex-twinless connected instance: a bidirected cycle with chords
/// (retried until 2VTC) or a twin-free double cycle.
fn instance(n: usize, chords: usize, seed: u64) -> DirectedGraph {
    if seed.is_multiple_of(2) {
        for attempt in 0..64 {
            let g = bidirected_cycle(
                n,
                chords.max(2),
                seed.wrapping_mul(64).wrapping_add(attempt),
            )
            .unwrap();
            if is_2_vertex_twinless_connected(&g) {
                return g;
            }
        }
    }
    twin_free_double_cycle(n, chords, seed).unwrap()
}

fn instances() -> impl Strategy<Value = DirectedGraph> {
    (5usize..=14, 0usize..10, any::<u64>())
        .prop_map(|(n, c, seed)| instance(n, c.min(n * (n - 1) - 2 * n), seed))
}

fn orders() -> impl Strategy<Value = EdgeOrder> {
    prop_oneof![
        Just(EdgeOrder::Lexicographic),
        Just(EdgeOrder::Reverse),
        any::<u64>().prop_map(EdgeOrder::Seeded),
    ]
}

fn assert_minimal(g: &DirectedGraph, set: &EdgeSet, pred: fn(&EdgeSubgraphView<'_>) -> bool) {
    assert!(pred(&EdgeSubgraphView::new(g, set)));
    for e in set.iter() {
        let mut smaller = set.clone();
        smaller.remove(e);
        assert!(
            !pred(&EdgeSubgraphView::new(g, &smaller)),
            "edge {:?} is removable",
            g.edge(e)
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn approx_invariants(g in instances(), order in orders()) {
        let r = approx_m2vtcs_with_order(&g, order).unwrap();
        let n = g.n();
        prop_assert!(r.verdict.is_pass());
        prop_assert!(r.e2v.is_subset(&r.e2t));
        prop_assert!(r.e2v.len() <= 4 * n);
        prop_assert!(r.e2t.len() - r.e2v.len() <= r.a_t() * (n - 1));
        prop_assert!(r.e2t.len() <= r.bound());
        prop_assert_eq!(r.bound(), size_bound(n, r.a_t()));
        prop_assert!(r.e2t.len() >= 2 * n);

        let mut rebuilt = r.e2v.clone();
        for step in &r.added_edges {
            prop_assert!(rebuilt.insert(step.edge), "edge added twice");
            prop_assert!(step.components_after < step.components_before);
            prop_assert!(r.taps_of_e2v.contains(&step.tap));
        }
        prop_assert_eq!(&rebuilt, &r.e2t);
        for &x in &r.taps_of_e2v {
            let per_tap = r.added_edges.iter().filter(|s| s.tap == x).count();
            prop_assert!(per_tap <= n - 2);
        }

        prop_assert_eq!(approx_m2vtcs_with_order(&g, order).unwrap(), r);
    }

    #[test]
    fn greedy_outputs_are_minimal(g in instances(), order in orders()) {
        let e2v = minimal_2vcs(&g, order).unwrap();
        assert_minimal(&g, &e2v, |v| is_2_vertex_connected(v));
        let e2t = minimal_2vtcs(&g, order).unwrap();
        assert_minimal(&g, &e2t, |v| is_2_vertex_twinless_connected(v));
        prop_assert!(e2t.len() >= 2 * g.n());
        // Re-running on the output is a fixed point.
        let reduced = g.subgraph(&e2t);
        prop_assert_eq!(minimal_2vtcs(&reduced, order).unwrap().len(), e2t.len());
    }

    #[test]
    fn passing_sets_are_2_vertex_connected(g in instances(), seed in any::<u64>()) {
        // Random subsets of a 2VTC graph: every verifier PASS is also 2VC.
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut set = g.full_edge_set();
        for e in g.edge_ids() {
            if rng.gen_bool(0.2) {
                set.remove(e);
            }
        }
        let view = EdgeSubgraphView::new(&g, &set);
        if verify_2vtc(&view).is_pass() {
            prop_assert!(is_2_vertex_connected(&view));
            prop_assert!(set.len() >= 2 * g.n());
        }
    }
}

#[test]
fn adding_a_cross_edge_merges_twinless_components() {
    // Strongly connected, not twinless strongly connected subgraphs H of a
    // twinless strongly connected G (or of G - x); any edge of G - H joining
    // two twinless components of H lowers the component count.
    let mut rng = ChaCha8Rng::seed_from_u64(0x1e44a2);
    let mut situations = 0;
    let mut seed = 0;
    while situations < 600 {
        seed += 1;
        let n = rng.gen_range(5..=12);
        let g = instance(n, rng.gen_range(0..8), seed);
        let delete = rng
            .gen_bool(0.5)
            .then(|| VertexId::new(rng.gen_range(0..n)));
        let mut sub = g.full_edge_set();
        let mut ids: Vec<_> = g.edge_ids().collect();
        ids.shuffle(&mut rng);
        let sc = |set: &EdgeSet| match delete {
            Some(x) => {
                is_strongly_connected(&VertexDeletedView::new(&EdgeSubgraphView::new(&g, set), x))
            }
            None => is_strongly_connected(&EdgeSubgraphView::new(&g, set)),
        };
        for e in ids {
            sub.remove(e);
            if !sc(&sub) {
                sub.insert(e);
            }
        }
        let count = |set: &EdgeSet| match delete {
            Some(x) => {
                twinless_sccs(&VertexDeletedView::new(&EdgeSubgraphView::new(&g, set), x)).count()
            }
            None => twinless_sccs(&EdgeSubgraphView::new(&g, set)).count(),
        };
        let partition = match delete {
            Some(x) => twinless_sccs(&VertexDeletedView::new(&EdgeSubgraphView::new(&g, &sub), x)),
            None => twinless_sccs(&EdgeSubgraphView::new(&g, &sub)),
        };
        let before = partition.count();
        if before < 2 {
            continue;
        }
        let cross: Vec<_> = g
            .edge_ids()
            .filter(|&e| {
                let (v, w) = g.edge(e);
                !sub.contains(e) && Some(v) != delete && Some(w) != delete && !partition.same(v, w)
            })
            .collect();
        assert!(
            !cross.is_empty(),
            "twinless strongly connected base must offer a cross edge"
        );
        for &e in cross.iter().take(3) {
            let mut bigger = sub.clone();
            bigger.insert(e);
            assert!(count(&bigger) < before, "no progress on seed {seed}");
            situations += 1;
        }
    }
}

#[test]
fn figure_and_family_sandwich() {
    let budget = SearchBudget::default();
    let mut solved = 0;
    for seed in 0..40u64 {
        let n = 5 + (seed as usize % 3);
        let g = instance(n, (seed as usize / 3) % 4, seed);
        let vcs = exact_min_2vcs(&g, budget).unwrap();
        let vtcs = exact_min_2vtcs(&g, budget).unwrap();
        let greedy = minimal_2vtcs(&g, EdgeOrder::Lexicographic).unwrap();
        assert!(2 * n <= vcs.optimum_size);
        assert!(vcs.optimum_size <= vtcs.optimum_size);
        assert!(vtcs.optimum_size <= greedy.len());
        assert!(greedy.len() <= g.m());
        assert!(is_2_vertex_connected(&EdgeSubgraphView::new(
            &g,
            &vcs.optimum_edges
        )));
        assert!(is_2_vertex_twinless_connected(&EdgeSubgraphView::new(
            &g,
            &vtcs.optimum_edges
        )));
        let approx = approx_m2vtcs(&g).unwrap();
        let ratio = approx.e2t.len() as f64 / vtcs.optimum_size as f64;
        assert!(ratio <= approx.ratio_ceiling());
        solved += 1;
    }
    assert_eq!(solved, 40);
}

#[test]
fn exact_optimum_ignores_vertex_labelling() {
    let budget = SearchBudget::default();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for seed in 0..12u64 {
        let g = instance(6, 3, seed);
        let mut perm: Vec<usize> = (0..g.n()).collect();
        perm.shuffle(&mut rng);
        let mut pairs: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .map(|&(u, v)| (perm[u.index()], perm[v.index()]))
            .collect();
        pairs.shuffle(&mut rng);
        let h = DirectedGraph::from_edge_list(g.n(), &pairs).unwrap();
        assert_eq!(
            exact_min_2vtcs(&g, budget).unwrap().optimum_size,
            exact_min_2vtcs(&h, budget).unwrap().optimum_size
        );
        assert_eq!(
            exact_min_2vcs(&g, budget).unwrap().optimum_size,
            exact_min_2vcs(&h, budget).unwrap().optimum_size
        );
        // Input pair order never matters.
        pairs.reverse();
        let h2 = DirectedGraph::from_edge_list(g.n(), &pairs).unwrap();
        assert_eq!(
            exact_min_2vtcs(&h, budget).unwrap(),
            exact_min_2vtcs(&h2, budget).unwrap()
        );
    }
}

#[test]
fn exact_witnesses_are_twinless_when_twin_free() {
    let g = twin_free_double_cycle(7, 4, 3).unwrap();
    let r = exact_min_2vtcs(&g, SearchBudget::default()).unwrap();
    assert!(is_twinless_strongly_connected(&EdgeSubgraphView::new(
        &g,
        &r.optimum_edges
    )));
}
