//! Semigroups realizing prescribed commuting graphs, and small fixtures.

use super::ConstructError;
use crate::commuting::commuting_graph;
use crate::graph::{build_graph, GraphSpec, SimpleGraph};
use crate::obstruction::semigroup_gate;
use crate::table::CayleyTable;

/// A semigroup of order `|V| + 2` whose commuting graph is `g`.
///
/// Vertices `0..n` become elements `v_0..v_(n-1)`, and two new elements
/// `0 = n` and `z = n + 1` form the centre. For vertices,
/// `v_i·v_j = z` when `i > j` and `{i, j}` is not an edge, and `0`
/// otherwise (including `i = j`); every product involving `0` or `z` is `0`.
/// All products land in `{0, z}` and every product with `z` is `0`, so the
/// table is associative.
pub fn realize_semigroup(g: &SimpleGraph) -> Result<CayleyTable, ConstructError> {
    let verdict = semigroup_gate(g);
    if !verdict.passed {
        return Err(ConstructError::Obstructed(verdict.violations));
    }
    let n = g.order();
    let (zero, z) = (n, n + 1);
    let t = CayleyTable::from_fn(n + 2, |i, j| {
        if i < n && j < n && i > j && !g.has_edge(i, j) {
            z
        } else {
            zero
        }
    })?;
    let mut labels: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    labels.push("0".into());
    labels.push("z".into());
    let t = t.with_labels(labels)?;
    check_realizes(&t, g, &[zero, z])?;
    Ok(t)
}

/// Centrefree semigroup whose commuting graph is the cycle
/// `x_0 ~ x_1 ~ ... ~ x_(L-1) ~ x_0`, for `L` divisible by four.
///
/// With subscripts mod `L`: `x_(2i)·y = x_(2i)`;
/// `x_(2i+1)·x_(2i+4j) = x_(2i)`; `x_(2i+1)·x_(2i+4j+2) = x_(2i+2)`;
/// `x_(2i+1)·x_(2j+1) = x_(2i+1)`.
pub fn realize_cycle_centrefree(len: usize) -> Result<CayleyTable, ConstructError> {
    if len == 0 {
        return Err(ConstructError::BadSpec("cycle length 0".into()));
    }
    if len % 4 != 0 {
        return Err(ConstructError::NotDivisibleByFour(len));
    }
    let t = CayleyTable::from_fn(len, |a, b| {
        if a % 2 == 0 || b % 2 == 1 {
            a
        } else if (b + len - (a - 1)) % 4 == 0 {
            a - 1
        } else {
            (a + 1) % len
        }
    })?;
    let t = t.with_labels((0..len).map(|i| format!("x{i}")).collect())?;
    let cycle = build_graph(&GraphSpec::Cycle(len)).expect("len >= 4");
    check_realizes(&t, &cycle, &[])?;
    Ok(t)
}

/// Associative, the given centre, and commuting graph equal to `g` with
/// vertex `i` at element `i`.
fn check_realizes(t: &CayleyTable, g: &SimpleGraph, centre: &[usize]) -> Result<(), ConstructError> {
    let fail = |msg: String| Err(ConstructError::PostconditionFailed(msg));
    let cg = match commuting_graph(t) {
        Ok(cg) => cg,
        Err(e) => return fail(e.to_string()),
    };
    if cg.centre != centre {
        return fail(format!("centre is {:?}, expected {:?}", cg.centre, centre));
    }
    if !cg.graph.same_edges(g) {
        return fail("commuting graph differs from the target".into());
    }
    Ok(())
}

/// The six-element centrefree semigroup `s1..s6` whose commuting graph
/// contains the induced 5-cycle `s2 ~ s3 ~ s6 ~ s4 ~ s5`.
pub fn s6_example() -> CayleyTable {
    let rows = [
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 1, 1],
        [0, 0, 0, 0, 2, 2],
        [3, 3, 3, 3, 3, 3],
        [0, 1, 1, 3, 4, 4],
        [0, 2, 2, 3, 5, 5],
    ];
    let rows: Vec<Vec<usize>> = rows.iter().map(|r| r.to_vec()).collect();
    CayleyTable::from_rows(&rows)
        .and_then(|t| t.with_labels((1..=6).map(|i| format!("s{i}")).collect()))
        .expect("fixture is well formed")
}

/// `v_i·v_j = v_i` on `n` elements.
pub fn left_zero(n: usize) -> Result<CayleyTable, ConstructError> {
    if n == 0 {
        return Err(ConstructError::BadSpec("left-zero semigroup needs an element".into()));
    }
    Ok(CayleyTable::from_fn(n, |a, _| a)?)
}

/// `s6_example` or `left_zero(<n>)`.
pub fn fixture(name: &str) -> Result<CayleyTable, ConstructError> {
    let name = name.trim();
    if name == "s6_example" {
        return Ok(s6_example());
    }
    if let Some(n) = name.strip_prefix("left_zero(").and_then(|r| r.strip_suffix(')')) {
        if let Ok(n) = n.trim().parse() {
            return left_zero(n);
        }
    }
    Err(ConstructError::UnknownFixture(name.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::obstruction::Obstruction;

    #[test]
    fn realize_c6() {
        let g = build_graph(&GraphSpec::Cycle(6)).unwrap();
        let t = realize_semigroup(&g).unwrap();
        assert_eq!(t.order(), 8);
        assert_eq!(t.centre(), vec![6, 7]);
    }

    #[test]
    fn realize_edgeless_pair() {
        let g = SimpleGraph::empty(2);
        let t = realize_semigroup(&g).unwrap();
        assert_eq!(commuting_graph(&t).unwrap().graph.decompose().rendering, "2K1");
    }

    #[test]
    fn complete_graph_is_obstructed() {
        let g = build_graph(&GraphSpec::Complete(3)).unwrap();
        match realize_semigroup(&g) {
            Err(ConstructError::Obstructed(v)) => {
                assert!(v.iter().all(|o| matches!(o, Obstruction::DominatingVertex(_))));
                assert_eq!(v.len(), 3);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn cycle_realizers() {
        for len in [4, 8, 12] {
            let t = realize_cycle_centrefree(len).unwrap();
            assert!(t.centre().is_empty());
        }
        for len in [1, 2, 3, 5, 6, 7, 10] {
            assert_eq!(realize_cycle_centrefree(len).unwrap_err(), ConstructError::NotDivisibleByFour(len));
        }
        assert!(matches!(realize_cycle_centrefree(0), Err(ConstructError::BadSpec(_))));
    }

    #[test]
    fn fixtures() {
        let s = fixture("s6_example").unwrap();
        assert!(s.is_semigroup());
        assert!(s.centre().is_empty());
        assert_eq!(fixture("left_zero(4)").unwrap().order(), 4);
        assert_eq!(
            fixture("right_zero(2)").unwrap_err(),
            ConstructError::UnknownFixture("right_zero(2)".into())
        );
    }

    #[test]
    fn s6_contains_the_induced_five_cycle() {
        let cg = commuting_graph(&s6_example()).unwrap();
        // s2 ~ s3 ~ s6 ~ s4 ~ s5 ~ s2, elements 1, 2, 5, 3, 4
        let cycle = [1, 2, 5, 3, 4];
        let sub = cg.graph.induced_subgraph(&cycle);
        assert_eq!(sub.edges(), vec![(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]);
        assert_eq!(cg.graph.find_forbidden_cycle(), None);
    }
}
