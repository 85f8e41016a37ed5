//! Simple undirected graphs.
//!
//! Text format:
//!
//! ```text
//! # comment
//! graph 4
//! e 0 1
//! e 1 2
//! ```

mod build;
mod iso;
mod structure;

use std::fmt::Write as _;

use thiserror::Error;

pub use build::{build_graph, lexicographic_product, GraphSpec};
pub use iso::{automorphisms, graphs_isomorphic};
pub use structure::{ComponentSummary, Decomposition, StructuralFeatures};

pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("bad graph spec: {0}")]
    BadSpec(String),
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("cannot read {path}: {msg}")]
    Io { path: String, msg: String },
}

/// Undirected, loop-free graph with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SimpleGraph {
    adj: Vec<Vec<Vertex>>,
    tags: Option<Vec<String>>,
}

impl SimpleGraph {
    pub fn empty(order: usize) -> Self {
        Self {
            adj: vec![Vec::new(); order],
            tags: None,
        }
    }

    /// Duplicate edges are merged; loops are rejected.
    pub fn from_edges(
        order: usize,
        edges: impl IntoIterator<Item = (Vertex, Vertex)>,
    ) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); order];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= order {
                    return Err(GraphError::VertexOutOfRange { vertex: w, order });
                }
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Self { adj, tags: None })
    }

    pub fn from_adjacency_matrix(rows: &[&[u8]]) -> Result<Self, GraphError> {
        let n = rows.len();
        let mut edges = Vec::new();
        for (u, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(GraphError::BadSpec(format!("row {u} has {} entries", row.len())));
            }
            for (v, &bit) in row.iter().enumerate() {
                if bit != rows[v][u] {
                    return Err(GraphError::BadSpec(format!("matrix not symmetric at ({u}, {v})")));
                }
                if bit != 0 && u < v {
                    edges.push((u, v));
                } else if bit != 0 && u == v {
                    return Err(GraphError::Loop(u));
                }
            }
        }
        Self::from_edges(n, edges)
    }

    pub fn with_tags(mut self, tags: Vec<String>) -> Self {
        assert_eq!(tags.len(), self.order(), "one tag per vertex");
        self.tags = Some(tags);
        self
    }

    pub fn tags(&self) -> Option<&[String]> {
        self.tags.as_deref()
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::with_capacity(self.size());
        for (u, list) in self.adj.iter().enumerate() {
            out.extend(list.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    /// Same vertex count and edge set, ignoring tags.
    pub fn same_edges(&self, other: &Self) -> bool {
        self.adj == other.adj
    }

    /// Subgraph induced on `vertices`; vertex `vertices[i]` becomes `i`.
    pub fn induced_subgraph(&self, vertices: &[Vertex]) -> Self {
        let mut index = vec![usize::MAX; self.order()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                let mut list: Vec<Vertex> = self.adj[v]
                    .iter()
                    .filter_map(|&w| (index[w] != usize::MAX).then_some(index[w]))
                    .collect();
                list.sort_unstable();
                list
            })
            .collect();
        let tags = self
            .tags
            .as_ref()
            .map(|t| vertices.iter().map(|&v| t[v].clone()).collect());
        Self { adj, tags }
    }

    /// Vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[Vertex]) -> Self {
        let n = self.order();
        let mut adj = vec![Vec::new(); n];
        for (v, list) in self.adj.iter().enumerate() {
            let mut mapped: Vec<Vertex> = list.iter().map(|&w| perm[w]).collect();
            mapped.sort_unstable();
            adj[perm[v]] = mapped;
        }
        let tags = self.tags.as_ref().map(|t| {
            let mut out = vec![String::new(); n];
            for (v, tag) in t.iter().enumerate() {
                out[perm[v]] = tag.clone();
            }
            out
        });
        Self { adj, tags }
    }

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Self) -> Self {
        let shift = self.order();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|l| l.iter().map(|&w| w + shift).collect::<Vec<_>>()),
        );
        Self { adj, tags: None }
    }

    pub fn parse(text: &str) -> Result<Self, GraphError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (line_no, header) = lines.next().ok_or(GraphError::Parse {
            line: 0,
            msg: "missing `graph <n>` header".into(),
        })?;
        let order = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
            ["graph", n] => n.parse::<usize>().map_err(|_| GraphError::Parse {
                line: line_no,
                msg: format!("bad order {n:?}"),
            })?,
            _ => {
                return Err(GraphError::Parse {
                    line: line_no,
                    msg: "expected `graph <n>`".into(),
                })
            }
        };
        let mut edges = Vec::new();
        for (line_no, line) in lines {
            let toks: Vec<&str> = line.split_whitespace().collect();
            let parse = |s: &str| {
                s.parse::<usize>().map_err(|_| GraphError::Parse {
                    line: line_no,
                    msg: format!("bad vertex {s:?}"),
                })
            };
            match toks.as_slice() {
                ["e", u, v] => {
                    let (u, v) = (parse(u)?, parse(v)?);
                    if u >= order || v >= order || u == v {
                        return Err(GraphError::Parse {
                            line: line_no,
                            msg: format!("invalid edge {u} {v} for order {order}"),
                        });
                    }
                    edges.push((u, v));
                }
                _ => {
                    return Err(GraphError::Parse {
                        line: line_no,
                        msg: "expected `e <u> <v>`".into(),
                    })
                }
            }
        }
        Self::from_edges(order, edges)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("graph {}\n", self.order());
        for (u, v) in self.edges() {
            let _ = writeln!(out, "e {u} {v}");
        }
        out
    }

    /// Graphviz export with vertices in index order, then edges.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph {\n");
        for v in 0..self.order() {
            match &self.tags {
                Some(t) => {
                    let _ = writeln!(out, "  {v} [label=\"{}\"];", t[v].replace('"', "\\\""));
                }
                None => {
                    let _ = writeln!(out, "  {v};");
                }
            }
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        let g = SimpleGraph::from_edges(4, [(0, 1), (2, 1), (1, 0)]).unwrap();
        assert_eq!(g.size(), 2);
        let text = g.to_text();
        assert_eq!(text, "graph 4\ne 0 1\ne 1 2\n");
        assert_eq!(SimpleGraph::parse(&format!("# c\n{text}")).unwrap(), g);
    }

    #[test]
    fn rejects_loops_and_bad_lines() {
        assert_eq!(SimpleGraph::from_edges(2, [(1, 1)]).unwrap_err(), GraphError::Loop(1));
        assert!(matches!(
            SimpleGraph::parse("graph 2\ne 0 2\n").unwrap_err(),
            GraphError::Parse { line: 2, .. }
        ));
        assert!(matches!(
            SimpleGraph::parse("graph 2\nedge 0 1\n").unwrap_err(),
            GraphError::Parse { line: 2, .. }
        ));
    }

    #[test]
    fn dot_export_is_stable() {
        let g = SimpleGraph::from_edges(3, [(2, 0), (0, 1)]).unwrap();
        assert_eq!(g.to_dot(), "graph {\n  0;\n  1;\n  2;\n  0 -- 1;\n  0 -- 2;\n}\n");
        let tagged = g.with_tags(vec!["a".into(), "b".into(), "c".into()]);
        assert!(tagged.to_dot().contains("0 [label=\"a\"];"));
    }

    #[test]
    fn induced_and_relabel() {
        let g = SimpleGraph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let h = g.induced_subgraph(&[0, 1, 2]);
        assert_eq!(h.edges(), vec![(0, 1), (1, 2)]);
        let r = g.relabel(&[1, 2, 3, 0]);
        assert_eq!(r.edges(), vec![(0, 1), (0, 3), (1, 2), (2, 3)]);
    }
}
