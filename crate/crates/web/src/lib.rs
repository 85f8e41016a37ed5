//! Browser bindings. Every export takes and returns strings; results are
//! JSON objects with `"ok": true` or `"ok": false` and an `"error"`.

use serde_json::{json, Value};
use wasm_bindgen::prelude::wasm_bindgen;

use commgraph::construct::{build_group, realize_cycle_centrefree, realize_semigroup, GroupSpec};
use commgraph::graph::build_graph;
use commgraph::obstruction::{centrefree_gate, group_gate, semigroup_gate};
use commgraph::{commuting_graph, CayleyTable, GraphSpec, SimpleGraph};

/// Largest group the demo will build.
pub const MAX_GROUP_ORDER: usize = 1000;

fn failure(msg: impl ToString) -> Value {
    json!({ "ok": false, "error": msg.to_string() })
}

/// Commuting graph of a named group with a layout for drawing.
#[wasm_bindgen]
pub fn group_graph(spec: &str) -> String {
    group_graph_value(spec).to_string()
}

/// Gate verdicts for a graph, and a realizing semigroup when one exists.
/// The input is a graph spec such as `C6` or a graph file's text.
#[wasm_bindgen]
pub fn analyze_graph(input: &str) -> String {
    analyze_graph_value(input).to_string()
}

/// The centrefree semigroup whose commuting graph is the cycle of length
/// `len`.
#[wasm_bindgen]
pub fn cycle_realizer(len: u32) -> String {
    cycle_realizer_value(len as usize).to_string()
}

pub fn group_graph_value(spec: &str) -> Value {
    let spec: GroupSpec = match spec.parse() {
        Ok(GroupSpec::FromFile(_)) => return failure("files are not available here"),
        Ok(s) => s,
        Err(e) => return failure(e),
    };
    let t = match build_group(&spec) {
        Ok(t) if t.order() <= MAX_GROUP_ORDER => t,
        Ok(t) => return failure(format!("order {} is above {MAX_GROUP_ORDER}", t.order())),
        Err(e) => return failure(e),
    };
    let cg = commuting_graph(&t).expect("groups are associative");
    let labels: Vec<String> = cg.vertex_to_element.iter().map(|&e| t.label(e)).collect();
    json!({
        "ok": true,
        "group": spec.to_string(),
        "order": t.order(),
        "centre": cg.centre.iter().map(|&z| t.label(z)).collect::<Vec<_>>(),
        "decomposition": cg.graph.decompose().rendering,
        "labels": labels,
        "edges": cg.graph.edges(),
        "positions": layout(&cg.graph),
    })
}

fn parse_graph(input: &str) -> Result<SimpleGraph, String> {
    let input = input.trim();
    if input.starts_with("graph") {
        return SimpleGraph::parse(input).map_err(|e| e.to_string());
    }
    match input.parse::<GraphSpec>() {
        Ok(GraphSpec::FromFile(_)) => Err("files are not available here".into()),
        Ok(spec) => build_graph(&spec).map_err(|e| e.to_string()),
        Err(e) => Err(e.to_string()),
    }
}

pub fn analyze_graph_value(input: &str) -> Value {
    let g = match parse_graph(input) {
        Ok(g) if g.order() <= 64 => g,
        Ok(g) => return failure(format!("{} vertices is more than the demo handles", g.order())),
        Err(e) => return failure(e),
    };
    let verdict = |v: commgraph::Verdict| {
        json!({
            "passed": v.passed,
            "violations": v.violations.iter().map(ToString::to_string).collect::<Vec<_>>(),
        })
    };
    let realization = match realize_semigroup(&g) {
        Ok(t) => table_value(&t),
        Err(e) => failure(e),
    };
    json!({
        "ok": true,
        "vertices": g.order(),
        "edges": g.edges(),
        "positions": layout(&g),
        "decomposition": g.decompose().rendering,
        "semigroup": verdict(semigroup_gate(&g)),
        "centrefree": verdict(centrefree_gate(&g)),
        "group": verdict(group_gate(&g)),
        "realization": realization,
    })
}

pub fn cycle_realizer_value(len: usize) -> Value {
    if len > 64 {
        return failure("the demo stops at length 64");
    }
    match realize_cycle_centrefree(len) {
        Ok(t) => {
            let cg = commuting_graph(&t).expect("verified on construction");
            let mut v = table_value(&t);
            v["edges"] = json!(cg.graph.edges());
            v["positions"] = json!(layout(&cg.graph));
            v
        }
        Err(e) => failure(e),
    }
}

fn table_value(t: &CayleyTable) -> Value {
    let labels: Vec<String> = t.elements().map(|e| t.label(e)).collect();
    let rows: Vec<&[u32]> = t.entries().chunks(t.order()).collect();
    json!({ "ok": true, "order": t.order(), "labels": labels, "rows": rows })
}

/// Each component on its own circle, components packed left to right in
/// rows, largest first. Coordinates lie in `[0, 1]`.
pub fn layout(g: &SimpleGraph) -> Vec<[f64; 2]> {
    let mut comps = g.components();
    comps.sort_by_key(|c| std::cmp::Reverse(c.len()));
    // cell width grows with the square root of the component size
    let widths: Vec<f64> = comps.iter().map(|c| (c.len() as f64).sqrt().max(1.0)).collect();
    let total: f64 = widths.iter().map(|w| w * w).sum();
    let row_width = total.sqrt().max(widths.first().copied().unwrap_or(1.0));
    let mut placed = Vec::with_capacity(comps.len());
    let (mut x, mut y, mut row_height) = (0.0f64, 0.0f64, 0.0f64);
    for &w in &widths {
        if x > 0.0 && x + w > row_width + 1e-9 {
            x = 0.0;
            y += row_height;
            row_height = 0.0;
        }
        placed.push((x, y, w));
        x += w;
        row_height = row_height.max(w);
    }
    let height = y + row_height;
    let scale = row_width.max(height).max(1.0);
    let mut pos = vec![[0.5, 0.5]; g.order()];
    for (comp, &(cx, cy, w)) in comps.iter().zip(&placed) {
        let r = if comp.len() == 1 { 0.0 } else { 0.4 * w };
        for (k, &v) in comp.iter().enumerate() {
            let angle = std::f64::consts::TAU * k as f64 / comp.len() as f64;
            pos[v] = [
                (cx + w / 2.0 + r * angle.cos()) / scale,
                (cy + w / 2.0 + r * angle.sin()) / scale,
            ];
        }
    }
    pos
}
