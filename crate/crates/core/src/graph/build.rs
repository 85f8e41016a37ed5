use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use super::{GraphError, SimpleGraph};

/// Description of a graph to build.
///
/// The string form accepted by [`FromStr`] is a `+`-separated list of terms,
/// each an optional multiplicity followed by an atom: `K<n>` (complete),
/// `C<n>` (cycle), `E<n>` (edgeless), `house`, `petersen`,
/// `lex(<spec>,<spec>)`, a parenthesised spec, or `@<path>` for a graph file.
/// For example `3K1+K2`, `2*C5`, `lex(E3,K2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphSpec {
    Complete(usize),
    Cycle(usize),
    Edgeless(usize),
    House,
    Petersen,
    Union(Vec<(GraphSpec, usize)>),
    Lex(Box<GraphSpec>, Box<GraphSpec>),
    FromFile(PathBuf),
}

/// House on five vertices: a 4-cycle 0-1-4-3 with roof 2 on the edge {0, 1}.
const HOUSE: [[u8; 5]; 5] = [
    [0, 1, 1, 1, 0],
    [1, 0, 1, 0, 1],
    [1, 1, 0, 0, 0],
    [1, 0, 0, 0, 1],
    [0, 1, 0, 1, 0],
];

pub fn build_graph(spec: &GraphSpec) -> Result<SimpleGraph, GraphError> {
    let need = |n: usize, min: usize, what: &str| {
        if n < min {
            Err(GraphError::BadSpec(format!("{what} needs at least {min} vertices, got {n}")))
        } else {
            Ok(())
        }
    };
    match spec {
        GraphSpec::Complete(n) => {
            need(*n, 1, "complete graph")?;
            SimpleGraph::from_edges(*n, (0..*n).flat_map(|u| (u + 1..*n).map(move |v| (u, v))))
        }
        GraphSpec::Cycle(n) => {
            need(*n, 3, "cycle")?;
            SimpleGraph::from_edges(*n, (0..*n).map(|u| (u, (u + 1) % n)))
        }
        GraphSpec::Edgeless(n) => {
            need(*n, 1, "edgeless graph")?;
            Ok(SimpleGraph::empty(*n))
        }
        GraphSpec::House => {
            let rows: Vec<&[u8]> = HOUSE.iter().map(|r| &r[..]).collect();
            SimpleGraph::from_adjacency_matrix(&rows)
        }
        GraphSpec::Petersen => {
            let outer = (0..5).map(|i| (i, (i + 1) % 5));
            let spokes = (0..5).map(|i| (i, i + 5));
            let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
            SimpleGraph::from_edges(10, outer.chain(spokes).chain(inner))
        }
        GraphSpec::Union(parts) => {
            if parts.is_empty() {
                return Err(GraphError::BadSpec("empty union".into()));
            }
            let mut g = SimpleGraph::empty(0);
            for (part, mult) in parts {
                if *mult == 0 {
                    return Err(GraphError::BadSpec("multiplicity must be positive".into()));
                }
                let h = build_graph(part)?;
                for _ in 0..*mult {
                    g = g.disjoint_union(&h);
                }
            }
            Ok(g)
        }
        GraphSpec::Lex(outer, inner) => Ok(lexicographic_product(&build_graph(outer)?, &build_graph(inner)?)),
        GraphSpec::FromFile(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| GraphError::Io {
                path: path.display().to_string(),
                msg: e.to_string(),
            })?;
            SimpleGraph::parse(&text)
        }
    }
}

/// `outer[inner]`: `(x1, y1) ~ (x2, y2)` iff `x1 ~ x2`, or `x1 = x2` and
/// `y1 ~ y2`. The pair `(x, y)` is vertex `x * |inner| + y`.
pub fn lexicographic_product(outer: &SimpleGraph, inner: &SimpleGraph) -> SimpleGraph {
    let m = inner.order();
    let mut edges = Vec::new();
    for x1 in 0..outer.order() {
        for y1 in 0..m {
            for &y2 in inner.neighbors(y1) {
                if y2 > y1 {
                    edges.push((x1 * m + y1, x1 * m + y2));
                }
            }
            for &x2 in outer.neighbors(x1) {
                if x2 > x1 {
                    edges.extend((0..m).map(|y2| (x1 * m + y1, x2 * m + y2)));
                }
            }
        }
    }
    SimpleGraph::from_edges(outer.order() * m, edges).expect("product edges are valid")
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSpec::Complete(n) => write!(f, "K{n}"),
            GraphSpec::Cycle(n) => write!(f, "C{n}"),
            GraphSpec::Edgeless(n) => write!(f, "E{n}"),
            GraphSpec::House => f.write_str("house"),
            GraphSpec::Petersen => f.write_str("petersen"),
            GraphSpec::Union(parts) => {
                for (i, (part, mult)) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str("+")?;
                    }
                    let wrap = matches!(part, GraphSpec::Union(_));
                    match (mult, wrap) {
                        (1, false) => write!(f, "{part}")?,
                        (1, true) => write!(f, "({part})")?,
                        (m, false) => write!(f, "{m}{part}")?,
                        (m, true) => write!(f, "{m}({part})")?,
                    }
                }
                Ok(())
            }
            GraphSpec::Lex(a, b) => write!(f, "lex({a},{b})"),
            GraphSpec::FromFile(p) => write!(f, "@{}", p.display()),
        }
    }
}

impl FromStr for GraphSpec {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut parser = SpecParser {
            text: compact.as_bytes(),
            pos: 0,
        };
        let spec = parser.union()?;
        if parser.pos != parser.text.len() {
            return Err(parser.error("trailing input"));
        }
        Ok(spec)
    }
}

struct SpecParser<'a> {
    text: &'a [u8],
    pos: usize,
}

impl SpecParser<'_> {
    fn error(&self, msg: &str) -> GraphError {
        GraphError::BadSpec(format!(
            "{msg} at offset {} in {:?}",
            self.pos,
            String::from_utf8_lossy(self.text)
        ))
    }

    fn peek(&self) -> Option<u8> {
        self.text.get(self.pos).copied()
    }

    fn eat(&mut self, byte: u8) -> bool {
        if self.peek() == Some(byte) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn number(&mut self) -> Option<usize> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.text[start..self.pos]).ok()?.parse().ok()
    }

    fn union(&mut self) -> Result<GraphSpec, GraphError> {
        let mut parts = vec![self.term()?];
        while self.eat(b'+') {
            parts.push(self.term()?);
        }
        Ok(match parts.as_slice() {
            [(single, 1)] => single.clone(),
            _ => GraphSpec::Union(parts),
        })
    }

    fn term(&mut self) -> Result<(GraphSpec, usize), GraphError> {
        let mult = self.number().unwrap_or(1);
        self.eat(b'*');
        Ok((self.atom()?, mult))
    }

    fn atom(&mut self) -> Result<GraphSpec, GraphError> {
        let rest = &self.text[self.pos..];
        let word = |w: &str| rest.len() >= w.len() && rest[..w.len()].eq_ignore_ascii_case(w.as_bytes());
        if word("house") {
            self.pos += 5;
            return Ok(GraphSpec::House);
        }
        if word("petersen") {
            self.pos += 8;
            return Ok(GraphSpec::Petersen);
        }
        if word("lex(") {
            self.pos += 4;
            let a = self.union()?;
            if !self.eat(b',') {
                return Err(self.error("expected `,`"));
            }
            let b = self.union()?;
            if !self.eat(b')') {
                return Err(self.error("expected `)`"));
            }
            return Ok(GraphSpec::Lex(Box::new(a), Box::new(b)));
        }
        if self.eat(b'(') {
            let inner = self.union()?;
            if !self.eat(b')') {
                return Err(self.error("expected `)`"));
            }
            return Ok(inner);
        }
        if self.eat(b'@') {
            let start = self.pos;
            while self.peek().is_some_and(|b| b != b'+' && b != b',' && b != b')') {
                self.pos += 1;
            }
            let path = String::from_utf8_lossy(&self.text[start..self.pos]).into_owned();
            return Ok(GraphSpec::FromFile(path.into()));
        }
        let kind = self.peek().ok_or_else(|| self.error("unexpected end"))?;
        self.pos += 1;
        let n = self.number().ok_or_else(|| self.error("expected a vertex count"))?;
        match kind.to_ascii_uppercase() {
            b'K' => Ok(GraphSpec::Complete(n)),
            b'C' => Ok(GraphSpec::Cycle(n)),
            b'E' => Ok(GraphSpec::Edgeless(n)),
            _ => Err(self.error("unknown graph")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(s: &str) -> SimpleGraph {
        build_graph(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn cycle_and_bad_cycle() {
        let g = build("C6");
        assert_eq!(g.order(), 6);
        assert!((0..6).all(|v| g.degree(v) == 2));
        assert!(matches!(build_graph(&GraphSpec::Cycle(2)), Err(GraphError::BadSpec(_))));
    }

    #[test]
    fn house_matches_matrix() {
        let g = build("house");
        let degrees: Vec<usize> = (0..5).map(|v| g.degree(v)).collect();
        assert_eq!(degrees, vec![3, 3, 2, 2, 2]);
        assert_eq!(g.edges(), vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 4), (3, 4)]);
        for (u, row) in HOUSE.iter().enumerate() {
            for (v, &bit) in row.iter().enumerate() {
                assert_eq!(g.has_edge(u, v), bit == 1);
            }
        }
    }

    #[test]
    fn petersen_is_cubic() {
        let g = build("petersen");
        assert_eq!((g.order(), g.size()), (10, 15));
        assert!((0..10).all(|v| g.degree(v) == 3));
    }

    #[test]
    fn lex_of_edgeless_and_edge_is_matching() {
        let g = build("lex(E3,K2)");
        assert_eq!(g.edges(), vec![(0, 1), (2, 3), (4, 5)]);
        assert!(g.same_edges(&build("3K2")));
    }

    #[test]
    fn lex_degree_formula() {
        let outer = build("C5+K1");
        let inner = build("K2+K1");
        let g = lexicographic_product(&outer, &inner);
        assert_eq!(g.order(), outer.order() * inner.order());
        for x in 0..outer.order() {
            for y in 0..inner.order() {
                let expected = inner.order() * outer.degree(x) + inner.degree(y);
                assert_eq!(g.degree(x * inner.order() + y), expected);
            }
        }
    }

    #[test]
    fn spec_strings_round_trip() {
        for s in ["3K1+K2", "K5", "2C5+E1", "lex(C4,K3)", "house+petersen", "2(K2+K1)"] {
            let spec: GraphSpec = s.parse().unwrap();
            assert_eq!(spec.to_string().parse::<GraphSpec>().unwrap(), spec, "{s}");
        }
        assert_eq!("1K5".parse::<GraphSpec>().unwrap(), GraphSpec::Complete(5));
        assert!("Q3".parse::<GraphSpec>().is_err());
        assert!("K".parse::<GraphSpec>().is_err());
        assert!("K3)".parse::<GraphSpec>().is_err());
        assert!(build_graph(&"0K2".parse().unwrap()).is_err());
    }
}
