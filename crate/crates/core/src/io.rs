//! Edge-list text format and DOT export.
//!
//! ```text
//! # comment
//! n m
//! u v      (m lines)
//! ```
//!
//! Vertex labels are arbitrary non-negative integers. If every label is
//! below `n` they are used as indices directly; otherwise the distinct
//! labels are sorted and re-indexed densely, and any vertex that never
//! appears in an edge gets a fresh label above the largest one.

use std::fmt::Write as _;

use crate::error::ParseError;
use crate::graph::{DirectedGraph, EdgeSet};

pub fn parse_edge_list(text: &str) -> Result<DirectedGraph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines
        .next()
        .ok_or_else(|| ParseError::new(0, "missing `n m` header"))?;
    let (n, m) = parse_pair(header_line, header)?;
    let n = usize::try_from(n).map_err(|_| ParseError::new(header_line, "n too large"))?;
    let m = usize::try_from(m).map_err(|_| ParseError::new(header_line, "m too large"))?;
    if n == 0 {
        return Err(ParseError::new(header_line, "n must be at least 1"));
    }

    let mut raw = Vec::with_capacity(m);
    let mut last_line = header_line;
    for (line, content) in lines.by_ref().take(m) {
        let (u, v) = parse_pair(line, content)?;
        if u == v {
            return Err(ParseError::new(line, format!("self-loop at vertex {u}")));
        }
        raw.push((u, v));
        last_line = line;
    }
    if raw.len() < m {
        return Err(ParseError::new(
            last_line,
            format!("expected {m} edges, found {}", raw.len()),
        ));
    }
    if let Some((line, _)) = lines.next() {
        return Err(ParseError::new(
            line,
            format!("more than the declared {m} edges"),
        ));
    }

    let mut labels: Vec<u64> = raw.iter().flat_map(|&(u, v)| [u, v]).collect();
    labels.sort_unstable();
    labels.dedup();
    if labels.len() > n {
        return Err(ParseError::new(
            header_line,
            format!("{} distinct vertices but n = {n}", labels.len()),
        ));
    }
    if labels.last().is_none_or(|&max| max < n as u64) {
        labels = (0..n as u64).collect();
    } else {
        let mut fresh = labels.last().copied().unwrap_or(0);
        while labels.len() < n {
            fresh += 1;
            labels.push(fresh);
        }
    }
    let index_of = |label: u64| labels.binary_search(&label).expect("label collected above");
    let pairs: Vec<(usize, usize)> = raw
        .iter()
        .map(|&(u, v)| (index_of(u), index_of(v)))
        .collect();
    DirectedGraph::with_labels(n, &pairs, labels)
        .map_err(|e| ParseError::new(header_line, e.to_string()))
}

fn parse_pair(line: usize, content: &str) -> Result<(u64, u64), ParseError> {
    let mut fields = content.split_whitespace();
    let mut next = |what: &str| -> Result<u64, ParseError> {
        let field = fields
            .next()
            .ok_or_else(|| ParseError::new(line, format!("missing {what}")))?;
        field
            .parse::<u64>()
            .map_err(|_| ParseError::new(line, format!("invalid {what} `{field}`")))
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if fields.next().is_some() {
        return Err(ParseError::new(line, "expected exactly two fields"));
    }
    Ok((a, b))
}

/// Writes the graph with its labels, edges in lexicographic order.
pub fn write_edge_list(g: &DirectedGraph) -> String {
    let mut out = String::with_capacity(16 * (g.m() + 1));
    writeln!(out, "{} {}", g.n(), g.m()).unwrap();
    for &(u, v) in g.edges() {
        writeln!(out, "{} {}", g.label(u), g.label(v)).unwrap();
    }
    out
}

/// Edge list of a spanning subgraph, using the base graph's labels.
pub fn write_edge_subset(g: &DirectedGraph, subset: &EdgeSet) -> String {
    write_edge_list(&g.subgraph(subset))
}

/// DOT rendering. With a solution, its edges are drawn solid and the
/// remaining base edges dashed.
pub fn write_dot(g: &DirectedGraph, solution: Option<&EdgeSet>) -> String {
    let mut out = String::from("digraph G {\n");
    for v in g.vertices() {
        writeln!(out, "  {};", g.label(v)).unwrap();
    }
    for e in g.edge_ids() {
        let (u, v) = g.edge(e);
        let style = match solution {
            Some(s) if !s.contains(e) => " [style=dashed]",
            _ => "",
        };
        writeln!(out, "  {} -> {}{};", g.label(u), g.label(v), style).unwrap();
    }
    out.push_str("}\n");
    out
}
