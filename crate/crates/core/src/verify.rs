//! Recomputes the known commuting-graph facts and reports each check.
//!
//! Every check belongs to a numbered criterion; a criterion passes when all
//! of its checks pass. The quick suite covers the constructions, realizers
//! and invariants. The full suite adds the exhaustive searches. Reports
//! contain no timings, so they are identical from run to run.

use std::fmt;
use std::path::Path;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::commuting::commuting_graph;
use crate::construct::{build_group, realize_cycle_centrefree, realize_semigroup, ConstructError, CATALOG};
use crate::equivalence::find_equivalence;
use crate::graph::{build_graph, graphs_isomorphic, lexicographic_product, GraphSpec, SimpleGraph};
use crate::obstruction::centrefree_gate;
use crate::search::{corpus_scan, search_realizations, Dedup, ScanPredicate, SearchSpec};
use crate::table::{CayleyTable, ElementId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Suite {
    Quick,
    Full,
}

impl std::str::FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "quick" => Ok(Suite::Quick),
            "full" => Ok(Suite::Full),
            _ => Err(format!("unknown suite {s:?}; use quick or full")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub criterion: u8,
    pub name: String,
    pub status: Status,
    pub detail: String,
}

impl Check {
    fn new(criterion: u8, name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Self {
            criterion,
            name: name.into(),
            status: if passed { Status::Pass } else { Status::Fail },
            detail: detail.into(),
        }
    }

    fn skip(criterion: u8, name: impl Into<String>, detail: impl Into<String>) -> Self {
        Self {
            criterion,
            name: name.into(),
            status: Status::Skip,
            detail: detail.into(),
        }
    }

    /// `name: PASS`, followed by the detail when there is one.
    pub fn line(&self) -> String {
        if self.detail.is_empty() {
            format!("{}: {}", self.name, self.status)
        } else {
            format!("{}: {} ({})", self.name, self.status, self.detail)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: Suite,
    pub checks: Vec<Check>,
}

impl Report {
    /// Skipped checks do not count as failures.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!("[{:2}] {}\n", c.criterion, c.line()));
        }
        let failed = self.checks.iter().filter(|c| c.status == Status::Fail).count();
        let skipped = self.checks.iter().filter(|c| c.status == Status::Skip).count();
        out.push_str(&format!(
            "{} checks, {} failed, {} skipped\n",
            self.checks.len(),
            failed,
            skipped
        ));
        out
    }
}

/// Criteria in the quick suite; the full suite runs all of them.
pub const QUICK: &[u8] = &[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 15, 16];
pub const FULL: &[u8] = &[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16];

/// `corpus` is a directory of group tables for criterion 16; without it
/// that criterion is skipped.
pub fn run_suite(suite: Suite, corpus: Option<&Path>) -> Report {
    let ids = match suite {
        Suite::Quick => QUICK,
        Suite::Full => FULL,
    };
    Report {
        suite,
        checks: ids.iter().flat_map(|&id| criterion(id, corpus)).collect(),
    }
}

/// The checks of one criterion. Unknown ids give no checks.
pub fn criterion(id: u8, corpus: Option<&Path>) -> Vec<Check> {
    match id {
        1 => vec![decomposition(1, "S3", "S_3", "3K1+1K2")],
        2 => quaternion_and_dihedral_8(),
        3 => edge_centre_groups(),
        4 => vec![decomposition(4, "A5", "A_5", "10K2+5K3+6K4")],
        5 => vec![decomposition(5, "PSL(2,7)", "PSL(2,7)", "28K2+8K6+Comp(n=63,diam=5)")],
        6 => two_groups(),
        7 => vec![s4_component()],
        8 => inversion_extensions(),
        9 => vec![frobenius_21()],
        10 => vec![natural_module()],
        11 => vec![random_semigroup_realizations(200, 0x5eed)],
        12 => vec![cycle_realizers()],
        13 => small_searches(),
        14 => vec![c6_order_7()],
        15 => vec![catalog_invariants()],
        16 => corpus_checks(corpus),
        _ => Vec::new(),
    }
}

fn group(spec: &str) -> Result<CayleyTable, ConstructError> {
    build_group(&spec.parse()?)
}

fn group_graph(spec: &str) -> Result<SimpleGraph, String> {
    let t = group(spec).map_err(|e| e.to_string())?;
    Ok(commuting_graph(&t).map_err(|e| e.to_string())?.graph)
}

fn decomposition(id: u8, spec: &str, display: &str, expected: &str) -> Check {
    let name = format!("Γ({display})={expected}");
    match group_graph(spec) {
        Ok(g) => {
            let got = g.decompose().rendering;
            let detail = if got == expected { String::new() } else { format!("got {got}") };
            Check::new(id, name, got == expected, detail)
        }
        Err(e) => Check::new(id, name, false, e),
    }
}

fn quaternion_and_dihedral_8() -> Vec<Check> {
    let mut out = vec![decomposition(2, "Q8", "Q_8", "3K2"), decomposition(2, "D8", "D_8", "3K2")];
    let iso = match (group_graph("Q8"), group_graph("D8")) {
        (Ok(a), Ok(b)) => graphs_isomorphic(&a, &b).is_some(),
        _ => false,
    };
    out.push(Check::new(2, "Γ(Q_8) ≅ Γ(D_8)", iso, ""));
    out
}

fn involutions(t: &CayleyTable) -> usize {
    let Some(e) = t.identity() else { return 0 };
    t.elements().filter(|&x| x != e && t.mul(x, x) == e).count()
}

fn edge_centre_groups() -> Vec<Check> {
    let mut out = vec![
        decomposition(3, "SL(2,3)", "SL(2,3)", "3K2+4K4"),
        decomposition(3, "SL(2,5)", "SL(2,5)", "15K2+10K4+6K8"),
        decomposition(3, "GL(2,3)", "GL(2,3)", "6K2+4K4+3K6"),
        decomposition(3, "J", "J", "6K2+4K4+3K6"),
    ];
    let name = "J has a unique involution, unlike GL(2,3)";
    out.push(match (group("J"), group("GL(2,3)")) {
        (Ok(j), Ok(gl)) => {
            let (a, b) = (involutions(&j), involutions(&gl));
            let passed = a == 1 && b != 1 && find_equivalence(&j, &gl, false).is_none();
            Check::new(3, name, passed, format!("{a} vs {b} involutions"))
        }
        (Err(e), _) | (_, Err(e)) => Check::new(3, name, false, e.to_string()),
    });
    out
}

fn two_groups() -> Vec<Check> {
    let mut out = Vec::new();
    for k in [4u32, 5] {
        let order = 1usize << k;
        let expected = format!("{}K2+1K{}", 1 << (k - 2), (1 << (k - 1)) - 2);
        for (prefix, display) in [("D", "D"), ("SD", "SD"), ("Q", "Q")] {
            out.push(decomposition(
                6,
                &format!("{prefix}{order}"),
                &format!("{display}_{order}"),
                &expected,
            ));
        }
    }
    out
}

fn s4_component() -> Check {
    let name = "Γ(S_4) has a component with 15 vertices and diameter 3";
    match group_graph("S4") {
        Ok(g) => {
            let d = g.decompose();
            let passed = d.other_components.iter().any(|c| c.size == 15 && c.diameter == 3);
            Check::new(7, name, passed, d.rendering)
        }
        Err(e) => Check::new(7, name, false, e),
    }
}

fn inversion_extensions() -> Vec<Check> {
    let mut out = Vec::new();
    for (inner, display, size) in [
        ("Z3", "Z_3", 3),
        ("Z5", "Z_5", 5),
        ("Z7", "Z_7", 7),
        ("Z9", "Z_9", 9),
        ("Z3xZ3", "Z_3×Z_3", 9),
        ("Z15", "Z_15", 15),
    ] {
        let name = format!("Γ({display}⋊Z_2)={size}K1+1K{}", size - 1);
        out.push(match group_graph(&format!("inv({inner})")) {
            Ok(g) => {
                let d = g.decompose();
                let shape = d.cliques == vec![(1, size), (size - 1, 1)] && d.other_components.is_empty();
                let passed = shape && g.order() % 4 == 1;
                Check::new(8, name, passed, format!("{} vertices, {}", g.order(), d.rendering))
            }
            Err(e) => Check::new(8, name, false, e),
        });
    }
    out
}

fn frobenius_21() -> Check {
    let name = "Γ(Z_7⋊Z_3)=7K2+1K6";
    match group_graph("Z7:Z3") {
        Ok(g) => {
            let d = g.decompose();
            let v = g.order();
            let counts = (v + 1) % 3 == 0
                && d.clique_count(2) == (v + 1) / 3
                && d.cliques.iter().any(|&(s, m)| m == 1 && s == (v - 2) / 3);
            // the largest component is a clique, so each of its vertices dominates it
            let passed = d.rendering == "7K2+1K6" && counts;
            Check::new(9, name, passed, format!("{v} vertices"))
        }
        Err(e) => Check::new(9, name, false, e),
    }
}

fn natural_module() -> Check {
    let name = "Γ(Z_2^4⋊SL(2,4))=160K2+96K4+Comp(n=255,diam=3)";
    match group_graph("Z2^4:SL(2,4)") {
        Ok(g) => {
            let d = g.decompose();
            let passed = d.rendering == "160K2+96K4+Comp(n=255,diam=3)";
            let detail = match d.other_components.first() {
                Some(c) => {
                    let clique = g.induced_subgraph(&c.vertices).max_clique_within(&(0..c.size).collect::<Vec<_>>());
                    format!(
                        "{}; largest clique in the big component has {} vertices",
                        d.rendering,
                        clique.len()
                    )
                }
                None => d.rendering,
            };
            Check::new(10, name, passed, detail)
        }
        Err(e) => Check::new(10, name, false, e),
    }
}

/// Random graphs on 2 to 12 vertices, resampled until no vertex dominates.
pub fn random_graphs(count: usize, seed: u64) -> Vec<SimpleGraph> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(2..=12);
        let p: f64 = rng.gen_range(0.1..0.9);
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if rng.gen_bool(p) {
                    edges.push((a, b));
                }
            }
        }
        let g = SimpleGraph::from_edges(n, edges).expect("valid edges");
        if g.dominating_vertices().is_empty() {
            out.push(g);
        }
    }
    out
}

fn random_semigroup_realizations(count: usize, seed: u64) -> Check {
    let name = format!("realize_semigroup on {count} random graphs");
    let mut bad = Vec::new();
    for (i, g) in random_graphs(count, seed).iter().enumerate() {
        let ok = realize_semigroup(g).is_ok_and(|t| {
            t.order() == g.order() + 2
                && commuting_graph(&t)
                    .is_ok_and(|cg| cg.centre.len() == 2 && graphs_isomorphic(&cg.graph, g).is_some())
        });
        if !ok {
            bad.push(i);
        }
    }
    let detail = if bad.is_empty() {
        String::new()
    } else {
        format!("failed on graphs {bad:?}")
    };
    Check::new(11, name, bad.is_empty(), detail)
}

fn cycle_realizers() -> Check {
    let name = "realize_cycle_centrefree succeeds exactly for L in {4,8,12,16,20} up to 21";
    let mut wrong = Vec::new();
    for len in 1..=21 {
        let ok = match realize_cycle_centrefree(len) {
            Ok(t) => len % 4 == 0 && t.order() == len,
            Err(ConstructError::NotDivisibleByFour(l)) => len % 4 != 0 && l == len,
            Err(_) => false,
        };
        if !ok {
            wrong.push(len);
        }
    }
    let detail = if wrong.is_empty() {
        String::new()
    } else {
        format!("wrong outcome for L = {wrong:?}")
    };
    Check::new(12, name, wrong.is_empty(), detail)
}

fn cycle_search(spec: &str, order: usize, centrefree: bool) -> Result<crate::search::SearchOutcome, String> {
    let g = build_graph(&spec.parse::<GraphSpec>().map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    let mut s = SearchSpec::new(g, order);
    s.centrefree = centrefree;
    s.dedup = Dedup::IsoAndAnti;
    s.workers = std::thread::available_parallelism().map_or(1, |n| n.get().min(8));
    search_realizations(&s).map_err(|e| e.to_string())
}

/// All graphs on `n` vertices up to isomorphism.
pub fn graphs_on(n: usize) -> Vec<SimpleGraph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    let mut out: Vec<SimpleGraph> = Vec::new();
    for mask in 0u32..1 << pairs.len() {
        let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
        let g = SimpleGraph::from_edges(n, edges).expect("valid edges");
        if !out.iter().any(|h| h.size() == g.size() && graphs_isomorphic(h, &g).is_some()) {
            out.push(g);
        }
    }
    out
}

fn small_searches() -> Vec<Check> {
    let mut out = Vec::new();
    let name = "C_4 at order 4, centrefree: 1 class up to anti-isomorphism, exhausted";
    out.push(match cycle_search("C4", 4, true) {
        Ok(o) => {
            let mut detail = format!("{} classes, {} nodes", o.count_up_to_dedup, o.nodes_explored);
            if o.count_up_to_dedup > 1 {
                // the extra class is a band whose odd elements are left identities
                detail.push_str("; extra classes beyond the cycle construction:");
                let cycle = realize_cycle_centrefree(4).ok();
                for r in &o.representatives {
                    if cycle.as_ref().is_some_and(|c| find_equivalence(r, c, true).is_some()) {
                        continue;
                    }
                    detail.push_str(&format!(" rows {:?}", rows(r)));
                }
            }
            Check::new(13, name, o.exhausted && o.count_up_to_dedup == 1, detail)
        }
        Err(e) => Check::new(13, name, false, e),
    });
    for (spec, display) in [("C5", "C_5"), ("house", "House")] {
        let name = format!("{display} at order 5, centrefree: 0 realizations, exhausted");
        out.push(match cycle_search(spec, 5, true) {
            Ok(o) => Check::new(
                13,
                name,
                o.exhausted && o.solutions == 0,
                format!("{} nodes", o.nodes_explored),
            ),
            Err(e) => Check::new(13, name, false, e),
        });
    }
    let name = "every graph on at most 4 vertices passing the centrefree gate is realized";
    let mut tried = 0;
    let mut missing = Vec::new();
    for n in 1..=4 {
        for g in graphs_on(n) {
            if !centrefree_gate(&g).passed {
                continue;
            }
            tried += 1;
            let mut s = SearchSpec::new(g.clone(), n);
            s.centrefree = true;
            s.dedup = Dedup::None;
            let found = search_realizations(&s).is_ok_and(|o| o.solutions > 0);
            if !found {
                missing.push(g.edges());
            }
        }
    }
    let detail = if missing.is_empty() {
        format!("{tried} graphs")
    } else {
        format!("{tried} graphs, unrealized: {missing:?}")
    };
    out.push(Check::new(13, name, missing.is_empty(), detail));
    out
}

fn rows(t: &CayleyTable) -> Vec<Vec<u32>> {
    t.entries().chunks(t.order()).map(<[u32]>::to_vec).collect()
}

fn c6_order_7() -> Check {
    let name = "C_6 at order 7: 0 realizations, exhausted";
    match cycle_search("C6", 7, false) {
        Ok(o) => Check::new(
            14,
            name,
            o.exhausted && o.solutions == 0,
            format!("{} nodes", o.nodes_explored),
        ),
        Err(e) => Check::new(14, name, false, e),
    }
}

/// Structural facts every group's commuting graph satisfies; returns one
/// message per violated fact.
pub fn group_invariant_violations(t: &CayleyTable) -> Vec<String> {
    let mut out = Vec::new();
    let cg = match commuting_graph(t) {
        Ok(cg) => cg,
        Err(e) => return vec![e.to_string()],
    };
    let g = &cg.graph;
    let z = cg.centre.len();
    for v in 0..g.order() {
        if (g.degree(v) + 1) % z != 0 {
            out.push(format!("|Z| = {z} does not divide d({v}) + 1 = {}", g.degree(v) + 1));
        }
    }
    for (a, b) in g.edges() {
        let isolated = g.degree(a) == 1 && g.degree(b) == 1;
        if !isolated && !g.edge_in_triangle(a, b) {
            out.push(format!("edge {a}-{b} is on no triangle"));
        }
    }
    for c in g.components_and_diameters() {
        if c.diameter > 2 {
            continue;
        }
        let elements: Vec<ElementId> = c.vertices.iter().map(|&v| cg.vertex_to_element[v]).collect();
        let closed = elements
            .iter()
            .all(|&x| cg.centre.iter().all(|&zz| elements.contains(&t.mul(x, zz))));
        if !closed {
            out.push(format!("component of {} is not closed under the centre", c.vertices[0]));
        }
    }
    if z > 1 {
        let quotient = centre_quotient_graph(t, &cg.vertex_to_element, &cg.centre);
        let blown_up = lexicographic_product(&quotient, &build_graph(&GraphSpec::Complete(z)).expect("z > 1"));
        if graphs_isomorphic(&blown_up, g).is_none() {
            out.push(format!("Γ is not Γ1[K{z}]"));
        }
    }
    out
}

/// Commuting graph on the cosets `xZ` of non-central `x`.
fn centre_quotient_graph(t: &CayleyTable, vertices: &[ElementId], centre: &[ElementId]) -> SimpleGraph {
    let mut reps: Vec<ElementId> = vertices
        .iter()
        .map(|&x| centre.iter().map(|&z| t.mul(x, z)).min().expect("centre is non-empty"))
        .collect();
    reps.sort_unstable();
    reps.dedup();
    let mut edges = Vec::new();
    for (i, &a) in reps.iter().enumerate() {
        for (j, &b) in reps.iter().enumerate().skip(i + 1) {
            if t.commute(a, b) {
                edges.push((i, j));
            }
        }
    }
    SimpleGraph::from_edges(reps.len(), edges).expect("valid edges")
}

fn catalog_invariants() -> Check {
    let name = format!("group invariants hold across the {} catalog groups", CATALOG.len());
    let mut bad = Vec::new();
    for spec in CATALOG {
        match group(spec) {
            Ok(t) => {
                let v = group_invariant_violations(&t);
                if !v.is_empty() {
                    bad.push(format!("{spec}: {}", v.join(", ")));
                }
            }
            Err(e) => bad.push(format!("{spec}: {e}")),
        }
    }
    Check::new(15, name, bad.is_empty(), bad.join("; "))
}

fn corpus_checks(corpus: Option<&Path>) -> Vec<Check> {
    let below = "corpus: no group below order 32 has a connected commuting graph";
    let at = "corpus: exactly 7 groups of order 32 have a connected commuting graph, each on 30 vertices";
    let Some(dir) = corpus else {
        let why = "no corpus directory given";
        return vec![Check::skip(16, below, why), Check::skip(16, at, why)];
    };
    match corpus_scan(dir, &ScanPredicate::ConnectedCommutingGraph) {
        Ok(r) => {
            let small: Vec<&str> = r.matches().filter(|e| e.order < 32).map(|e| e.file.as_str()).collect();
            let at32: Vec<_> = r.matches().filter(|e| e.order == 32).collect();
            let scanned = r.by_order.values().map(|c| c.0).sum::<usize>();
            let has32 = r.by_order.contains_key(&32);
            vec![
                Check::new(
                    16,
                    below,
                    small.is_empty() && scanned > 0,
                    format!("{scanned} groups scanned; matches {small:?}"),
                ),
                Check::new(
                    16,
                    at,
                    has32 && at32.len() == 7 && at32.iter().all(|e| e.vertices == Some(30)),
                    format!("{} matches at order 32", at32.len()),
                ),
            ]
        }
        Err(e) => vec![Check::new(16, below, false, e.to_string()), Check::new(16, at, false, e.to_string())],
    }
}
