//! Necessary conditions for a graph to be a commuting graph.
//!
//! Each gate lists every violated condition with a witness. Passing a gate
//! does not imply realizability, except for [`semigroup_gate`], which is
//! complete: any graph passing it is realized by
//! [`realize_semigroup`](crate::construct::realize_semigroup).

use std::fmt;

use serde::Serialize;

use crate::graph::{SimpleGraph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum GateTarget {
    Semigroup,
    CentrefreeSemigroup,
    Group,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Obstruction {
    SingleVertex,
    DominatingVertex(Vertex),
    TooSmallForGroup(usize),
    EdgeWithoutTriangle(Vertex, Vertex),
    BridgeNotIsolated(Vertex, Vertex),
    LeafNotIsolatedEdge(Vertex),
    ForbiddenOddCycle(Vec<Vertex>),
    IsolatedVertexShape(String),
    IsolatedEdgeShape(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub target: GateTarget,
    pub violations: Vec<Obstruction>,
    pub passed: bool,
}

impl Verdict {
    fn new(target: GateTarget, violations: Vec<Obstruction>) -> Self {
        Self {
            target,
            passed: violations.is_empty(),
            violations,
        }
    }

    /// One line per violation, or `passed`.
    pub fn report(&self) -> String {
        let mut out = format!("target: {}\n", self.target);
        if self.passed {
            out.push_str("passed\n");
        }
        for v in &self.violations {
            out.push_str(&format!("violation: {v}\n"));
        }
        out
    }
}

impl fmt::Display for GateTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GateTarget::Semigroup => "semigroup",
            GateTarget::CentrefreeSemigroup => "centrefree",
            GateTarget::Group => "group",
        })
    }
}

impl fmt::Display for Obstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Obstruction::SingleVertex => f.write_str("single vertex"),
            Obstruction::DominatingVertex(v) => write!(f, "dominating vertex {v}"),
            Obstruction::TooSmallForGroup(n) => write!(f, "{n} vertices is too few for a group"),
            Obstruction::EdgeWithoutTriangle(u, v) => write!(f, "edge {u}-{v} is on no triangle"),
            Obstruction::BridgeNotIsolated(u, v) => write!(f, "bridge {u}-{v} is not an isolated edge"),
            Obstruction::LeafNotIsolatedEdge(v) => write!(f, "leaf {v} is not on an isolated edge"),
            Obstruction::ForbiddenOddCycle(c) => {
                let parts: Vec<String> = c.iter().map(ToString::to_string).collect();
                write!(f, "induced odd cycle {} with no edge on a triangle", parts.join("-"))
            }
            Obstruction::IsolatedVertexShape(d) => write!(f, "isolated vertices: {d}"),
            Obstruction::IsolatedEdgeShape(d) => write!(f, "isolated edges: {d}"),
        }
    }
}

fn semigroup_violations(g: &SimpleGraph) -> Vec<Obstruction> {
    if g.order() == 1 {
        return vec![Obstruction::SingleVertex];
    }
    g.dominating_vertices()
        .into_iter()
        .map(Obstruction::DominatingVertex)
        .collect()
}

/// Single vertex, or a vertex adjacent to all others.
pub fn semigroup_gate(g: &SimpleGraph) -> Verdict {
    Verdict::new(GateTarget::Semigroup, semigroup_violations(g))
}

/// The semigroup conditions plus an induced odd cycle of length at least
/// five none of whose edges lies on a triangle.
pub fn centrefree_gate(g: &SimpleGraph) -> Verdict {
    let mut v = semigroup_violations(g);
    if let Some(cycle) = g.find_forbidden_cycle() {
        v.push(Obstruction::ForbiddenOddCycle(cycle));
    }
    Verdict::new(GateTarget::CentrefreeSemigroup, v)
}

/// Conditions for the commuting graph of a group.
///
/// A graph with no vertices is not obstructed: abelian groups realize it.
pub fn group_gate(g: &SimpleGraph) -> Verdict {
    let n = g.order();
    let mut v = Vec::new();
    if (1..=4).contains(&n) {
        v.push(Obstruction::TooSmallForGroup(n));
    }
    v.extend(semigroup_violations(g));
    let features = g.structural_features();
    let isolated_edge = |(a, b): (Vertex, Vertex)| g.degree(a) == 1 && g.degree(b) == 1;
    for &(a, b) in &features.edges_not_in_any_triangle {
        if !isolated_edge((a, b)) {
            v.push(Obstruction::EdgeWithoutTriangle(a, b));
        }
    }
    for &(a, b) in &features.bridges {
        if !isolated_edge((a, b)) {
            v.push(Obstruction::BridgeNotIsolated(a, b));
        }
    }
    for &leaf in &features.leaves {
        let other = g.neighbors(leaf)[0];
        if g.degree(other) != 1 {
            v.push(Obstruction::LeafNotIsolatedEdge(leaf));
        }
    }
    if !features.isolated_vertices.is_empty() {
        if let Some(detail) = isolated_vertex_shape(g, &features.isolated_vertices) {
            v.push(Obstruction::IsolatedVertexShape(detail));
        }
    }
    if !features.isolated_edges.is_empty() {
        if let Some(detail) = isolated_edge_shape(g) {
            v.push(Obstruction::IsolatedEdgeShape(detail));
        }
    }
    Verdict::new(GateTarget::Group, v)
}

/// With an isolated vertex: `|V| ≡ 1 (mod 4)`, exactly `(|V|+1)/2`
/// isolated vertices, and the rest a clique.
fn isolated_vertex_shape(g: &SimpleGraph, isolated: &[Vertex]) -> Option<String> {
    let n = g.order();
    if n == 1 {
        return None;
    }
    if n % 4 != 1 {
        return Some(format!("{n} vertices is not 1 mod 4"));
    }
    if isolated.len() != (n + 1) / 2 {
        return Some(format!("{} isolated vertices, expected {}", isolated.len(), (n + 1) / 2));
    }
    let rest: Vec<Vertex> = (0..n).filter(|&x| g.degree(x) > 0).collect();
    if !g.is_clique(&rest) {
        return Some("the non-isolated vertices do not form a clique".into());
    }
    None
}

/// With an isolated edge: every component is a clique except at most one,
/// which has diameter at most five.
fn isolated_edge_shape(g: &SimpleGraph) -> Option<String> {
    let others: Vec<_> = g
        .components_and_diameters()
        .into_iter()
        .filter(|c| !c.is_clique)
        .collect();
    match others.as_slice() {
        [] => None,
        [one] if one.diameter <= 5 => None,
        [one] => Some(format!("non-complete component of diameter {}", one.diameter)),
        many => Some(format!("{} non-complete components", many.len())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_graph, GraphSpec};

    fn build(s: &str) -> SimpleGraph {
        build_graph(&s.parse::<GraphSpec>().unwrap()).unwrap()
    }

    #[test]
    fn semigroup_gate_cases() {
        let v = semigroup_gate(&build("K4"));
        assert!(!v.passed);
        assert!(v.violations.iter().all(|o| matches!(o, Obstruction::DominatingVertex(_))));
        assert_eq!(semigroup_gate(&build("K1")).violations, vec![Obstruction::SingleVertex]);
        assert!(semigroup_gate(&build("C7")).passed);
        assert!(semigroup_gate(&SimpleGraph::empty(0)).passed);
    }

    #[test]
    fn centrefree_gate_cases() {
        let v = centrefree_gate(&build("C5"));
        assert_eq!(v.violations, vec![Obstruction::ForbiddenOddCycle(vec![0, 1, 2, 3, 4])]);
        assert!(centrefree_gate(&build("house")).passed);
        assert!(centrefree_gate(&build("C8")).passed);
    }

    #[test]
    fn group_gate_cases() {
        let p = group_gate(&build("petersen"));
        assert!(p.violations.iter().any(|o| matches!(o, Obstruction::EdgeWithoutTriangle(..))));
        assert!(group_gate(&build("5K1+K4")).passed);
        let k4 = group_gate(&build("K4"));
        assert!(k4.violations.contains(&Obstruction::TooSmallForGroup(4)));
        assert!(k4.violations.iter().any(|o| matches!(o, Obstruction::DominatingVertex(_))));
        assert!(group_gate(&SimpleGraph::empty(0)).passed);
    }

    #[test]
    fn isolated_vertex_shape_violations() {
        // 9 vertices but only 4 isolated
        let v = group_gate(&build("4K1+K5"));
        assert!(v.violations.iter().any(|o| matches!(o, Obstruction::IsolatedVertexShape(_))));
        // 7 is not 1 mod 4
        let v = group_gate(&build("4K1+K3"));
        assert!(v.violations.iter().any(|o| matches!(o, Obstruction::IsolatedVertexShape(_))));
    }

    #[test]
    fn isolated_edge_shape_is_only_about_shape() {
        assert!(group_gate(&build("3K2+5K4+2K7")).passed);
        let two = group_gate(&build("K2+lex(C6,K3)+lex(C6,K3)"));
        assert!(two.violations.iter().any(|o| matches!(o, Obstruction::IsolatedEdgeShape(_))));
        // the same non-complete component on its own passes the shape check
        assert!(group_gate(&build("K2+lex(C6,K3)")).passed);
    }

    #[test]
    fn bridge_and_leaf() {
        // a pendant edge hanging off a triangle
        let g = SimpleGraph::from_edges(6, [(0, 1), (1, 2), (0, 2), (2, 3), (4, 5)]).unwrap();
        let v = group_gate(&g);
        assert!(v.violations.contains(&Obstruction::BridgeNotIsolated(2, 3)));
        assert!(v.violations.contains(&Obstruction::LeafNotIsolatedEdge(3)));
        assert!(v.violations.contains(&Obstruction::EdgeWithoutTriangle(2, 3)));
    }

    #[test]
    fn report_lists_violations() {
        let r = group_gate(&build("K3")).report();
        assert!(r.starts_with("target: group\n"));
        assert!(r.contains("violation: 3 vertices is too few for a group"));
    }
}
