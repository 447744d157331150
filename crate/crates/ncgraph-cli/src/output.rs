//! DOT and JSON emitters. JSON documents are byte-stable: vertices in
//! element order, edges sorted lexicographically with i < j.

use ncgraph::graphcore::SimpleGraph;
use ncgraph::ncg::{LoopedTaggedGraph, NcGraph};
use serde_json::json;

fn sorted_edges(g: &SimpleGraph) -> Vec<(usize, usize)> {
    let mut edges = g.edges();
    edges.sort_unstable();
    edges
}

pub fn gncg_to_json(g: &NcGraph) -> String {
    let vertices: Vec<_> = g
        .vertices
        .iter()
        .map(|v| json!({"id": v.element, "order": v.order, "in_h": v.in_h}))
        .collect();
    let edges: Vec<_> = sorted_edges(&g.graph)
        .into_iter()
        .map(|(a, b)| json!([a, b]))
        .collect();
    let doc = json!({
        "n": g.group_order,
        "h": g.subgroup_order,
        "vertices": vertices,
        "edges": edges,
    });
    format!("{}\n", serde_json::to_string_pretty(&doc).expect("graph serializes"))
}

pub fn gncg_to_dot(g: &NcGraph) -> String {
    let mut out = String::from("graph ncg {\n");
    out.push_str(&format!(
        "  label=\"{} |H|={}\";\n",
        g.group_name, g.subgroup_order
    ));
    // vertices in element-index order; H members drawn as boxes
    for (i, v) in g.vertices.iter().enumerate() {
        let shape = if v.in_h { "box" } else { "ellipse" };
        out.push_str(&format!(
            "  v{i} [label=\"{}\", shape={shape}];\n",
            g.graph.label(i)
        ));
    }
    for (a, b) in sorted_edges(&g.graph) {
        out.push_str(&format!("  v{a} -- v{b};\n"));
    }
    out.push_str("}\n");
    out
}

pub fn tagged_to_json(t: &LoopedTaggedGraph) -> String {
    let mut edges = Vec::new();
    for a in 0..t.n() {
        for b in a..t.n() {
            if t.adjacent(a, b) {
                edges.push(json!([a, b]));
            }
        }
    }
    let doc = json!({
        "n": t.n(),
        "labels": t.labels,
        "tagged": t.tagged,
        "edges": edges,
    });
    format!("{}\n", serde_json::to_string_pretty(&doc).expect("graph serializes"))
}

pub fn tagged_to_dot(t: &LoopedTaggedGraph) -> String {
    let mut out = String::from("graph tagged {\n");
    for v in 0..t.n() {
        let shape = if t.tagged[v] { "box" } else { "ellipse" };
        out.push_str(&format!("  v{v} [label=\"{}\", shape={shape}];\n", t.labels[v]));
    }
    for a in 0..t.n() {
        for b in a..t.n() {
            if t.adjacent(a, b) {
                out.push_str(&format!("  v{a} -- v{b};\n"));
            }
        }
    }
    out.push_str("}\n");
    out
}

pub fn plain_to_json(g: &SimpleGraph) -> String {
    let edges: Vec<_> = sorted_edges(g).into_iter().map(|(a, b)| json!([a, b])).collect();
    let doc = json!({
        "n": g.n(),
        "labels": g.labels(),
        "edges": edges,
    });
    format!("{}\n", serde_json::to_string_pretty(&doc).expect("graph serializes"))
}

pub fn plain_to_dot(g: &SimpleGraph, name: &str) -> String {
    let mut out = String::from("graph g {\n");
    out.push_str(&format!("  label=\"{name}\";\n"));
    for v in 0..g.n() {
        out.push_str(&format!("  v{v} [label=\"{}\"];\n", g.label(v)));
    }
    for (a, b) in sorted_edges(g) {
        out.push_str(&format!("  v{a} -- v{b};\n"));
    }
    out.push_str("}\n");
    out
}
