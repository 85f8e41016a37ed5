use std::collections::VecDeque;
use std::fmt::Write as _;

use serde::Serialize;

use super::{SimpleGraph, Vertex};

/// A connected component with its size and diameter.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentSummary {
    pub vertices: Vec<Vertex>,
    pub size: usize,
    pub is_clique: bool,
    pub diameter: usize,
}

/// Components grouped as cliques with multiplicities plus the rest.
///
/// The rendering lists `<mult>K<size>` terms by ascending clique size,
/// then `Comp(n=<size>,diam=<d>)` terms by ascending size and diameter,
/// joined with `+`. The empty graph renders as the empty string.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub cliques: Vec<(usize, usize)>,
    pub other_components: Vec<ComponentSummary>,
    pub rendering: String,
}

impl Decomposition {
    pub fn clique_count(&self, size: usize) -> usize {
        self.cliques
            .iter()
            .find(|&&(s, _)| s == size)
            .map_or(0, |&(_, m)| m)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct StructuralFeatures {
    pub isolated_vertices: Vec<Vertex>,
    pub isolated_edges: Vec<(Vertex, Vertex)>,
    pub leaves: Vec<Vertex>,
    pub bridges: Vec<(Vertex, Vertex)>,
    pub dominating_vertices: Vec<Vertex>,
    pub edges_not_in_any_triangle: Vec<(Vertex, Vertex)>,
}

impl SimpleGraph {
    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for &w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Breadth-first distances from `source`; unreachable vertices get `None`.
    pub fn distances_from(&self, source: Vertex) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].expect("queued vertices have a distance");
            for &w in self.neighbors(v) {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    fn eccentricity(&self, source: Vertex, scratch: &mut [usize], queue: &mut VecDeque<Vertex>) -> usize {
        const UNSEEN: usize = usize::MAX;
        scratch[source] = 0;
        queue.clear();
        queue.push_back(source);
        let mut touched = vec![source];
        let mut ecc = 0;
        while let Some(v) = queue.pop_front() {
            let d = scratch[v];
            ecc = ecc.max(d);
            for &w in self.neighbors(v) {
                if scratch[w] == UNSEEN {
                    scratch[w] = d + 1;
                    touched.push(w);
                    queue.push_back(w);
                }
            }
        }
        for v in touched {
            scratch[v] = UNSEEN;
        }
        ecc
    }

    /// One summary per component; diameters by BFS from every vertex.
    pub fn components_and_diameters(&self) -> Vec<ComponentSummary> {
        let mut scratch = vec![usize::MAX; self.order()];
        let mut queue = VecDeque::new();
        self.components()
            .into_iter()
            .map(|vertices| {
                let size = vertices.len();
                let edges: usize = vertices.iter().map(|&v| self.degree(v)).sum::<usize>() / 2;
                let is_clique = edges == size * (size - 1) / 2;
                let diameter = if is_clique {
                    usize::from(size > 1)
                } else {
                    vertices
                        .iter()
                        .map(|&v| self.eccentricity(v, &mut scratch, &mut queue))
                        .max()
                        .unwrap_or(0)
                };
                ComponentSummary {
                    vertices,
                    size,
                    is_clique,
                    diameter,
                }
            })
            .collect()
    }

    pub fn decompose(&self) -> Decomposition {
        let mut cliques: Vec<(usize, usize)> = Vec::new();
        let mut others = Vec::new();
        for comp in self.components_and_diameters() {
            if comp.is_clique {
                match cliques.iter_mut().find(|(s, _)| *s == comp.size) {
                    Some((_, m)) => *m += 1,
                    None => cliques.push((comp.size, 1)),
                }
            } else {
                others.push(comp);
            }
        }
        cliques.sort_unstable();
        others.sort_by_key(|c| (c.size, c.diameter, c.vertices.clone()));
        let mut rendering = String::new();
        for (size, mult) in &cliques {
            if !rendering.is_empty() {
                rendering.push('+');
            }
            let _ = write!(rendering, "{mult}K{size}");
        }
        for c in &others {
            if !rendering.is_empty() {
                rendering.push('+');
            }
            let _ = write!(rendering, "Comp(n={},diam={})", c.size, c.diameter);
        }
        Decomposition {
            cliques,
            other_components: others,
            rendering,
        }
    }

    /// Vertices adjacent to every other vertex (only for graphs with at
    /// least two vertices).
    pub fn dominating_vertices(&self) -> Vec<Vertex> {
        let n = self.order();
        if n < 2 {
            return Vec::new();
        }
        (0..n).filter(|&v| self.degree(v) == n - 1).collect()
    }

    /// Whether the edge `{u, v}` lies on a triangle.
    pub fn edge_in_triangle(&self, u: Vertex, v: Vertex) -> bool {
        let (a, b) = (self.neighbors(u), self.neighbors(v));
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return true,
            }
        }
        false
    }

    /// Bridges by low-link depth-first search, as `(u, v)` with `u < v`.
    pub fn bridges(&self) -> Vec<(Vertex, Vertex)> {
        let n = self.order();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut out = Vec::new();
        let mut time = 0;
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            // (vertex, parent, next neighbour index)
            let mut stack: Vec<(Vertex, Vertex, usize)> = vec![(root, usize::MAX, 0)];
            disc[root] = time;
            low[root] = time;
            time += 1;
            while let Some(&mut (v, parent, ref mut idx)) = stack.last_mut() {
                if let Some(&w) = self.neighbors(v).get(*idx) {
                    *idx += 1;
                    if w == parent {
                        continue;
                    }
                    if disc[w] == usize::MAX {
                        disc[w] = time;
                        low[w] = time;
                        time += 1;
                        stack.push((w, v, 0));
                    } else {
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if parent != usize::MAX {
                        low[parent] = low[parent].min(low[v]);
                        if low[v] > disc[parent] {
                            out.push((parent.min(v), parent.max(v)));
                        }
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn structural_features(&self) -> StructuralFeatures {
        let n = self.order();
        let isolated_vertices = (0..n).filter(|&v| self.degree(v) == 0).collect();
        let isolated_edges = self
            .edges()
            .into_iter()
            .filter(|&(u, v)| self.degree(u) == 1 && self.degree(v) == 1)
            .collect();
        let leaves = (0..n).filter(|&v| self.degree(v) == 1).collect();
        let edges_not_in_any_triangle = self
            .edges()
            .into_iter()
            .filter(|&(u, v)| !self.edge_in_triangle(u, v))
            .collect();
        StructuralFeatures {
            isolated_vertices,
            isolated_edges,
            leaves,
            bridges: self.bridges(),
            dominating_vertices: self.dominating_vertices(),
            edges_not_in_any_triangle,
        }
    }

    pub fn is_bipartite(&self) -> bool {
        let mut side = vec![u8::MAX; self.order()];
        for s in 0..self.order() {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &w in self.neighbors(v) {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[v];
                        stack.push(w);
                    } else if side[w] == side[v] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// An induced cycle of odd length at least five none of whose edges
    /// lies on a triangle, if one exists. Such a cycle cannot occur in the
    /// commuting graph of a centrefree semigroup.
    ///
    /// Only edges on no triangle can appear, so the search walks that
    /// subgraph, keeping paths induced in the whole graph. The cycle is
    /// returned starting at its smallest vertex.
    pub fn find_forbidden_cycle(&self) -> Option<Vec<Vertex>> {
        let n = self.order();
        let free = SimpleGraph::from_edges(
            n,
            self.edges()
                .into_iter()
                .filter(|&(u, v)| !self.edge_in_triangle(u, v)),
        )
        .expect("subgraph of a valid graph");
        if free.is_bipartite() {
            return None;
        }
        let mut path = Vec::new();
        let mut on_path = vec![false; n];
        for start in 0..n {
            path.clear();
            path.push(start);
            on_path[start] = true;
            let found = self.extend_induced(&free, &mut path, &mut on_path);
            on_path[start] = false;
            if found {
                return Some(path);
            }
        }
        None
    }

    fn extend_induced(&self, free: &SimpleGraph, path: &mut Vec<Vertex>, on_path: &mut [bool]) -> bool {
        let start = path[0];
        let last = *path.last().expect("path is never empty");
        for &u in free.neighbors(last) {
            if u <= start || on_path[u] {
                continue;
            }
            // u may touch the path only at `last`, or at `start` when closing
            let inner = if path.len() > 1 { &path[1..path.len() - 1] } else { &[][..] };
            if inner.iter().any(|&p| self.has_edge(u, p)) {
                continue;
            }
            if path.len() >= 2 && self.has_edge(u, start) {
                let len = path.len() + 1;
                if len >= 5 && len % 2 == 1 && free.has_edge(u, start) {
                    path.push(u);
                    return true;
                }
                continue;
            }
            path.push(u);
            on_path[u] = true;
            if self.extend_induced(free, path, on_path) {
                return true;
            }
            on_path[u] = false;
            path.pop();
        }
        false
    }

    /// A maximum clique among `candidates` (Bron–Kerbosch with pivoting).
    pub fn max_clique_within(&self, candidates: &[Vertex]) -> Vec<Vertex> {
        let mut best = Vec::new();
        let mut current = Vec::new();
        self.bron_kerbosch(&mut current, candidates.to_vec(), Vec::new(), &mut best);
        best.sort_unstable();
        best
    }

    fn bron_kerbosch(&self, r: &mut Vec<Vertex>, p: Vec<Vertex>, mut x: Vec<Vertex>, best: &mut Vec<Vertex>) {
        if p.is_empty() {
            if x.is_empty() && r.len() > best.len() {
                *best = r.clone();
            }
            return;
        }
        if r.len() + p.len() <= best.len() {
            return;
        }
        let pivot = p
            .iter()
            .chain(x.iter())
            .copied()
            .max_by_key(|&u| p.iter().filter(|&&v| self.has_edge(u, v)).count())
            .expect("p is non-empty");
        let mut p = p;
        let branch: Vec<Vertex> = p.iter().copied().filter(|&v| !self.has_edge(pivot, v)).collect();
        for v in branch {
            let np = p.iter().copied().filter(|&w| self.has_edge(v, w)).collect();
            let nx = x.iter().copied().filter(|&w| self.has_edge(v, w)).collect();
            r.push(v);
            self.bron_kerbosch(r, np, nx, best);
            r.pop();
            p.retain(|&w| w != v);
            x.push(v);
        }
    }

    pub fn is_clique(&self, vertices: &[Vertex]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| self.has_edge(u, v)))
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
    fn decompose_renderings() {
        assert_eq!(build("K5").decompose().rendering, "1K5");
        assert_eq!(build("K2+3K1").decompose().rendering, "3K1+1K2");
        assert_eq!(build("C6+K2").decompose().rendering, "1K2+Comp(n=6,diam=3)");
        assert_eq!(SimpleGraph::empty(0).decompose().rendering, "");
    }

    #[test]
    fn edgeless_components() {
        let comps = build("E4").components_and_diameters();
        assert_eq!(comps.len(), 4);
        assert!(comps.iter().all(|c| c.size == 1 && c.diameter == 0 && c.is_clique));
    }

    #[test]
    fn path_diameter() {
        let g = SimpleGraph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let comps = g.components_and_diameters();
        assert_eq!(comps[0].diameter, 4);
        assert!(!comps[0].is_clique);
    }

    #[test]
    fn petersen_features() {
        let f = build("petersen").structural_features();
        assert_eq!(f.edges_not_in_any_triangle.len(), 15);
        assert!(f.bridges.is_empty());
        assert!(f.dominating_vertices.is_empty());
    }

    #[test]
    fn isolated_features() {
        let f = build("3K1+K2").structural_features();
        assert_eq!(f.isolated_vertices.len(), 3);
        assert_eq!(f.isolated_edges.len(), 1);
        assert_eq!(f.leaves.len(), 2);
        assert_eq!(f.bridges, f.isolated_edges);
        assert_eq!(build("K4").structural_features().dominating_vertices, vec![0, 1, 2, 3]);
    }

    #[test]
    fn bridges_in_a_barbell() {
        // two triangles joined by the edge {2, 3}
        let g = SimpleGraph::from_edges(6, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_eq!(g.bridges(), vec![(2, 3)]);
    }

    #[test]
    fn forbidden_cycles() {
        assert_eq!(build("C5").find_forbidden_cycle(), Some(vec![0, 1, 2, 3, 4]));
        assert_eq!(build("C8").find_forbidden_cycle(), None);
        assert_eq!(build("C7").find_forbidden_cycle().map(|c| c.len()), Some(7));
        assert!(build("petersen").find_forbidden_cycle().is_some());
        // wheel: every rim edge is on a triangle
        let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        edges.extend((0..5).map(|i| (i, 5)));
        assert_eq!(SimpleGraph::from_edges(6, edges).unwrap().find_forbidden_cycle(), None);
    }

    #[test]
    fn odd_cycle_with_chord_is_not_induced() {
        // 7-cycle with a chord making a 4-cycle and 5-cycle; the 5-cycle is induced
        let mut edges: Vec<(usize, usize)> = (0..7).map(|i| (i, (i + 1) % 7)).collect();
        edges.push((0, 3));
        let g = SimpleGraph::from_edges(7, edges).unwrap();
        let cycle = g.find_forbidden_cycle().unwrap();
        assert_eq!(cycle, vec![0, 3, 4, 5, 6]);
    }

    #[test]
    fn max_clique() {
        let g = build("K4+C5");
        let all: Vec<usize> = (0..9).collect();
        assert_eq!(g.max_clique_within(&all), vec![0, 1, 2, 3]);
        assert!(g.is_clique(&[0, 1, 2]));
        assert!(!g.is_clique(&[3, 4]));
    }
}
