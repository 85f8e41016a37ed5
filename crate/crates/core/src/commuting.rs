//! The commuting graph of a semigroup.

use crate::graph::{SimpleGraph, Vertex};
use crate::table::{CayleyTable, ElementId, TableError};

/// `graph` has one vertex per non-central element, in increasing element
/// order; `vertex_to_element[v]` is the element behind vertex `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommutingGraph {
    pub graph: SimpleGraph,
    pub vertex_to_element: Vec<ElementId>,
    pub centre: Vec<ElementId>,
}

impl CommutingGraph {
    /// Vertex of a non-central element.
    pub fn vertex_of(&self, e: ElementId) -> Option<Vertex> {
        self.vertex_to_element.binary_search(&e).ok()
    }
}

/// Fails with `NotASemigroup` on a non-associative table.
pub fn commuting_graph(t: &CayleyTable) -> Result<CommutingGraph, TableError> {
    t.check_associativity()
        .map_err(|v| TableError::NotASemigroup { a: v.a, b: v.b, c: v.c })?;
    Ok(commuting_graph_of_magma(t))
}

/// Same construction without the associativity check.
pub(crate) fn commuting_graph_of_magma(t: &CayleyTable) -> CommutingGraph {
    let centre = t.centre();
    let vertex_to_element: Vec<ElementId> = t.elements().filter(|e| centre.binary_search(e).is_err()).collect();
    let mut edges = Vec::new();
    for (i, &a) in vertex_to_element.iter().enumerate() {
        for (j, &b) in vertex_to_element.iter().enumerate().skip(i + 1) {
            if t.commute(a, b) {
                edges.push((i, j));
            }
        }
    }
    let graph = SimpleGraph::from_edges(vertex_to_element.len(), edges)
        .expect("indices are in range")
        .with_tags(vertex_to_element.iter().map(|&e| t.label(e)).collect());
    CommutingGraph {
        graph,
        vertex_to_element,
        centre,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn abelian_table_has_empty_graph() {
        let t = CayleyTable::from_fn(4, |a, b| (a + b) % 4).unwrap();
        let cg = commuting_graph(&t).unwrap();
        assert_eq!(cg.graph.order(), 0);
        assert_eq!(cg.centre, vec![0, 1, 2, 3]);
    }

    #[test]
    fn left_zero_is_edgeless() {
        let t = CayleyTable::from_fn(4, |a, _| a).unwrap();
        let cg = commuting_graph(&t).unwrap();
        assert_eq!(cg.graph.decompose().rendering, "4K1");
        assert!(cg.centre.is_empty());
        assert_eq!(cg.vertex_of(2), Some(2));
    }

    #[test]
    fn rejects_non_associative() {
        let t = CayleyTable::from_fn(3, |a, b| (a + 3 - b) % 3).unwrap();
        assert!(matches!(commuting_graph(&t), Err(TableError::NotASemigroup { .. })));
    }

    #[test]
    fn tags_are_labels() {
        let t = CayleyTable::from_fn(2, |a, _| a)
            .unwrap()
            .with_labels(vec!["p".into(), "q".into()])
            .unwrap();
        let cg = commuting_graph(&t).unwrap();
        assert_eq!(cg.graph.tags().unwrap(), ["p", "q"]);
    }
}
