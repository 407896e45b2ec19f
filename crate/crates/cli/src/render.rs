//! Text and JSON renderings. Every vertex is printed by its label.

use std::fmt::Write;

use serde_json::{json, Value};
use twinless::{
    Certificate, ConnectivityReport, DirectedGraph, EdgeSet, ExactResult, PairKind, SparsifyResult,
    TsccPartition, Verdict, VertexId,
};

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn labels(g: &DirectedGraph, vs: &[VertexId]) -> Vec<u64> {
    vs.iter().map(|&v| g.label(v)).collect()
}

/// Space separated labels.
pub fn label_line(g: &DirectedGraph, vs: &[VertexId]) -> String {
    let parts: Vec<String> = vs.iter().map(|&v| g.label(v).to_string()).collect();
    parts.join(" ")
}

/// Edge pairs by label, in lexicographic order of the base graph.
pub fn edge_pairs(g: &DirectedGraph, set: &EdgeSet) -> Vec<[u64; 2]> {
    set.iter()
        .map(|e| {
            let (u, v) = g.edge(e);
            [g.label(u), g.label(v)]
        })
        .collect()
}

pub fn certificate_text(g: &DirectedGraph, c: &Certificate) -> String {
    match *c {
        Certificate::TooFewVertices { n } => format!("only {n} vertices"),
        Certificate::NotStronglyConnected { from, to } => format!(
            "vertex {} is unreachable from vertex {}",
            g.label(to),
            g.label(from)
        ),
        Certificate::NotTwinlessStronglyConnected { u, v, components } => format!(
            "vertices {} and {} lie in different twinless components ({components} in total)",
            g.label(u),
            g.label(v)
        ),
        Certificate::TwinlessArticulationPoint(x) => {
            format!("vertex {} is a twinless articulation point", g.label(x))
        }
    }
}

pub fn verdict_json(g: &DirectedGraph, v: &Verdict) -> Value {
    match v {
        Verdict::Pass => json!({ "pass": true }),
        Verdict::Fail(c) => json!({ "pass": false, "certificate": certificate_text(g, c) }),
    }
}

pub fn verdict_text(g: &DirectedGraph, v: &Verdict) -> String {
    match v {
        Verdict::Pass => "PASS".to_string(),
        Verdict::Fail(c) => format!("FAIL: {}", certificate_text(g, c)),
    }
}

pub fn report_text(g: &DirectedGraph, r: &ConnectivityReport) -> String {
    let listing = |computed: bool, vs: &[VertexId]| {
        if computed {
            format!("({}) {}", vs.len(), label_line(g, vs))
                .trim_end()
                .to_string()
        } else {
            "n/a".to_string()
        }
    };
    let mut out = String::new();
    writeln!(out, "vertices: {}", r.n).unwrap();
    writeln!(out, "edges: {}", r.m).unwrap();
    writeln!(out, "strongly connected: {}", yes(r.is_strongly_connected)).unwrap();
    writeln!(
        out,
        "twinless strongly connected: {}",
        yes(r.is_twinless_strongly_connected)
    )
    .unwrap();
    writeln!(out, "strongly connected components: {}", r.scc_count).unwrap();
    writeln!(
        out,
        "twinless strongly connected components: {}",
        r.tscc_count
    )
    .unwrap();
    writeln!(
        out,
        "strong articulation points: {}",
        listing(r.saps_computed, &r.strong_articulation_points)
    )
    .unwrap();
    writeln!(
        out,
        "twinless articulation points: {}",
        listing(r.taps_computed, &r.twinless_articulation_points)
    )
    .unwrap();
    writeln!(out, "2VC: {}", yes(r.is_2_vertex_connected)).unwrap();
    writeln!(out, "2VTC: {}", yes(r.is_2_vertex_twinless_connected)).unwrap();
    out
}

pub fn report_json(g: &DirectedGraph, r: &ConnectivityReport) -> Value {
    json!({
        "n": r.n,
        "m": r.m,
        "scc_count": r.scc_count,
        "tscc_count": r.tscc_count,
        "saps": r.saps_computed.then(|| labels(g, &r.strong_articulation_points)),
        "taps": r.taps_computed.then(|| labels(g, &r.twinless_articulation_points)),
        "flags": {
            "strongly_connected": r.is_strongly_connected,
            "twinless_strongly_connected": r.is_twinless_strongly_connected,
            "two_vertex_connected": r.is_2_vertex_connected,
            "two_vertex_twinless_connected": r.is_2_vertex_twinless_connected,
        },
    })
}

fn kind_name(k: PairKind) -> &'static str {
    match k {
        PairKind::Single => "single",
        PairKind::Twin => "twin",
    }
}

pub fn tscc_text(g: &DirectedGraph, p: &TsccPartition) -> String {
    let mut out = String::new();
    writeln!(out, "strongly connected components: {}", p.scc().count()).unwrap();
    writeln!(out, "twinless strongly connected components: {}", p.count()).unwrap();
    for (i, members) in p.members().iter().enumerate() {
        let scc = p.scc().component(members[0]).unwrap();
        writeln!(out, "component {i} (scc {scc}): {}", label_line(g, members)).unwrap();
    }
    for t in p.tree_edges() {
        writeln!(
            out,
            "tree edge (scc {}): {} -- {} via {} <-> {} ({})",
            t.scc,
            t.components.0,
            t.components.1,
            g.label(t.pair.0),
            g.label(t.pair.1),
            kind_name(t.kind)
        )
        .unwrap();
    }
    out
}

pub fn tscc_json(g: &DirectedGraph, p: &TsccPartition) -> Value {
    let comps: Vec<Value> = p
        .members()
        .iter()
        .map(|m| json!({ "scc": p.scc().component(m[0]), "vertices": labels(g, m) }))
        .collect();
    let tree: Vec<Value> = p
        .tree_edges()
        .iter()
        .map(|t| {
            json!({
                "scc": t.scc,
                "components": [t.components.0, t.components.1],
                "pair": [g.label(t.pair.0), g.label(t.pair.1)],
                "kind": kind_name(t.kind),
            })
        })
        .collect();
    json!({
        "scc_count": p.scc().count(),
        "tscc_count": p.count(),
        "components": comps,
        "tree_edges": tree,
    })
}

pub fn sparsify_json(g: &DirectedGraph, r: &SparsifyResult) -> Value {
    let trace: Vec<Value> = r
        .added_edges
        .iter()
        .map(|s| {
            let (u, v) = g.edge(s.edge);
            json!({
                "tap": g.label(s.tap),
                "edge": [g.label(u), g.label(v)],
                "components_before": s.components_before,
                "components_after": s.components_after,
            })
        })
        .collect();
    json!({
        "n": r.n,
        "m": r.m,
        "a_t": r.a_t(),
        "taps_of_e2v": labels(g, &r.taps_of_e2v),
        "bound": r.bound(),
        "ratio_ceiling": r.ratio_ceiling(),
        "e2v_size": r.e2v.len(),
        "e2t_size": r.e2t.len(),
        "e2v": edge_pairs(g, &r.e2v),
        "e2t": edge_pairs(g, &r.e2t),
        "added_edges": trace,
        "verdict": verdict_json(g, &r.verdict),
    })
}

pub fn sparsify_text(g: &DirectedGraph, r: &SparsifyResult) -> String {
    let mut out = String::new();
    writeln!(out, "vertices: {}", r.n).unwrap();
    writeln!(out, "edges: {}", r.m).unwrap();
    writeln!(out, "e2v: {}", r.e2v.len()).unwrap();
    let taps = format!("({}) {}", r.a_t(), label_line(g, &r.taps_of_e2v));
    writeln!(
        out,
        "twinless articulation points of e2v: {}",
        taps.trim_end()
    )
    .unwrap();
    for s in &r.added_edges {
        let (u, v) = g.edge(s.edge);
        writeln!(
            out,
            "added {} -> {} for {} ({} -> {} components)",
            g.label(u),
            g.label(v),
            g.label(s.tap),
            s.components_before,
            s.components_after
        )
        .unwrap();
    }
    writeln!(out, "e2t: {}", r.e2t.len()).unwrap();
    writeln!(out, "bound: {}", r.bound()).unwrap();
    writeln!(out, "verdict: {}", verdict_text(g, &r.verdict)).unwrap();
    out
}

pub fn exact_json(g: &DirectedGraph, problem: &str, r: &ExactResult) -> Value {
    json!({
        "problem": problem,
        "n": g.n(),
        "m": g.m(),
        "optimum_size": r.optimum_size,
        "proven": r.proven,
        "lower_bound": r.lower_bound,
        "nodes_explored": r.nodes_explored,
        "edges": edge_pairs(g, &r.optimum_edges),
    })
}

pub fn exact_text(g: &DirectedGraph, problem: &str, r: &ExactResult) -> String {
    let mut out = String::new();
    writeln!(out, "problem: {problem}").unwrap();
    if r.proven {
        writeln!(out, "optimum: {}", r.optimum_size).unwrap();
    } else {
        writeln!(
            out,
            "best found: {} (not proven, lower bound {})",
            r.optimum_size, r.lower_bound
        )
        .unwrap();
    }
    writeln!(out, "nodes explored: {}", r.nodes_explored).unwrap();
    for [u, v] in edge_pairs(g, &r.optimum_edges) {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}
