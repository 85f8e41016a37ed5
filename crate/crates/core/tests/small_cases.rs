//! Small instances checked end to end across modules.

use commgraph::construct::semidirect::{has_nontrivial_fixed_point, homomorphisms_to_aut};
use commgraph::construct::{build_group, realize_cycle_centrefree, s6_example, GroupSpec};
use commgraph::equivalence::EquivalenceKind;
use commgraph::graph::graphs_isomorphic;
use commgraph::obstruction::{centrefree_gate, group_gate, semigroup_gate};
use commgraph::search::{search_realizations, Dedup, SearchSpec};
use commgraph::verify::graphs_on;
use commgraph::{commuting_graph, find_equivalence, GraphSpec, SimpleGraph};

fn graph(s: &str) -> SimpleGraph {
    commgraph::graph::build_graph(&s.parse::<GraphSpec>().unwrap()).unwrap()
}

fn realizable_centrefree(g: &SimpleGraph) -> bool {
    let mut s = SearchSpec::new(g.clone(), g.order());
    s.centrefree = true;
    s.dedup = Dedup::None;
    let out = search_realizations(&s).unwrap();
    assert!(out.exhausted);
    out.solutions > 0
}

#[test]
fn five_vertex_graphs_of_valency_at_most_three() {
    let candidates: Vec<SimpleGraph> = graphs_on(5)
        .into_iter()
        .filter(|g| (0..5).all(|v| g.degree(v) <= 3))
        .collect();
    let failures: Vec<&SimpleGraph> = candidates.iter().filter(|g| !realizable_centrefree(g)).collect();
    assert_eq!(failures.len(), 2);
    for g in ["C5", "house"] {
        assert!(failures.iter().any(|f| graphs_isomorphic(f, &graph(g)).is_some()), "{g}");
    }
    // the gate explains the 5-cycle but not the house
    assert!(!centrefree_gate(&graph("C5")).passed);
    assert!(centrefree_gate(&graph("house")).passed);
}

#[test]
fn s3_actions_on_small_abelian_groups_have_fixed_points() {
    let s3 = build_group(&GroupSpec::Symmetric(3)).unwrap();
    let mut modules: Vec<Vec<usize>> = (2..=16).map(|n| vec![n]).collect();
    modules.extend([
        vec![2, 2],
        vec![2, 4],
        vec![2, 2, 2],
        vec![3, 3],
        vec![2, 6],
        vec![2, 8],
        vec![4, 4],
        vec![2, 2, 4],
        vec![2, 2, 2, 2],
    ]);
    for orders in modules {
        let n = build_group(&GroupSpec::AbelianProduct(orders.clone())).unwrap();
        let actions = homomorphisms_to_aut(&s3, &n).unwrap();
        assert!(!actions.is_empty());
        for a in &actions {
            assert!(has_nontrivial_fixed_point(&s3, &n, a), "{orders:?}");
        }
    }
}

#[test]
fn fixed_point_free_action_exists_for_a_cyclic_group() {
    // the contrast case: Z3 acting on Z7 by squaring fixes only 0
    let z3 = build_group(&GroupSpec::Cyclic(3)).unwrap();
    let z7 = build_group(&GroupSpec::Cyclic(7)).unwrap();
    let actions = homomorphisms_to_aut(&z3, &z7).unwrap();
    assert_eq!(actions.len(), 3);
    assert!(actions.iter().any(|a| !a.is_trivial() && !has_nontrivial_fixed_point(&z3, &z7, a)));
}

#[test]
fn cycle_realizer_and_its_opposite() {
    let t = realize_cycle_centrefree(4).unwrap();
    let op = t.opposite();
    assert_ne!(t, op);
    assert!(find_equivalence(&t, &op, false).is_none());
    let cert = find_equivalence(&t, &op, true).unwrap();
    assert_eq!(cert.kind, EquivalenceKind::AntiIsomorphism);
    assert!(cert.verify(&t, &op));
}

#[test]
fn quaternion_and_dihedral_tables_differ_but_graphs_agree() {
    let q8 = build_group(&GroupSpec::GeneralizedQuaternion(8)).unwrap();
    let d8 = build_group(&GroupSpec::Dihedral(8)).unwrap();
    assert!(find_equivalence(&q8, &d8, true).is_none());
    let (a, b) = (commuting_graph(&q8).unwrap().graph, commuting_graph(&d8).unwrap().graph);
    assert!(graphs_isomorphic(&a, &b).is_some());
}

#[test]
fn fixture_and_its_unitization() {
    let s = s6_example();
    let cg = commuting_graph(&s).unwrap();
    assert!(cg.centre.is_empty());
    let u = s.unitize().unwrap();
    let cu = commuting_graph(&u).unwrap();
    assert_eq!(cu.centre, vec![6]);
    assert!(cu.graph.same_edges(&cg.graph));
    assert!(semigroup_gate(&cg.graph).passed);
}

#[test]
fn catalog_graphs_pass_the_group_gate() {
    for spec in commgraph::construct::CATALOG {
        let t = build_group(&spec.parse().unwrap()).unwrap();
        let g = commuting_graph(&t).unwrap().graph;
        let v = group_gate(&g);
        assert!(v.passed, "{spec}: {}", v.report());
        assert!(semigroup_gate(&g).passed, "{spec}");
    }
}

#[test]
fn petersen_is_not_a_group_commuting_graph() {
    assert!(!group_gate(&graph("petersen")).passed);
    assert!(semigroup_gate(&graph("petersen")).passed);
}
