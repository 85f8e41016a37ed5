//! Exhaustive search for semigroups with a prescribed commuting graph.
//!
//! Elements `0..|V|` of every candidate table are the target's vertices and
//! the remaining elements are central. Relabelings that fix the target (and
//! permute the central elements) are broken by keeping only tables that are
//! smallest in row-major order among their relabelings, so each solution
//! class is still reached at least once. Surviving tables are re-verified
//! from scratch and then deduplicated up to (anti)isomorphism.
//!
//! The search splits the top of the tree into jobs, runs them on worker
//! threads and merges results in job order, so the outcome does not depend
//! on the number of workers.

mod corpus;
mod engine;
mod persist;

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::commuting::commuting_graph;
use crate::equivalence::find_equivalence;
use crate::graph::SimpleGraph;
use crate::table::CayleyTable;

pub use corpus::{corpus_scan, CorpusEntry, CorpusReport, ScanPredicate};
pub use persist::{load_outcome, save_outcome, Manifest};

use engine::{Limits, Problem, State};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Dedup {
    None,
    Iso,
    IsoAndAnti,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    pub max_nodes: u64,
    pub max_time: Option<Duration>,
}

impl Default for Budget {
    fn default() -> Self {
        Self {
            max_nodes: 1_000_000_000,
            max_time: Some(Duration::from_secs(60 * 60)),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SearchSpec {
    pub target: SimpleGraph,
    pub order: usize,
    pub centrefree: bool,
    pub dedup: Dedup,
    pub budget: Budget,
    pub workers: usize,
    /// Largest symmetry group used for pruning; a subgroup is still sound.
    pub symmetry_cap: usize,
}

impl SearchSpec {
    pub fn new(target: SimpleGraph, order: usize) -> Self {
        Self {
            target,
            order,
            centrefree: false,
            dedup: Dedup::IsoAndAnti,
            budget: Budget::default(),
            workers: 1,
            symmetry_cap: 5040,
        }
    }
}

#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub representatives: Vec<CayleyTable>,
    pub count_up_to_dedup: usize,
    /// Verified tables before deduplication.
    pub solutions: usize,
    pub nodes_explored: u64,
    pub exhausted: bool,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("bad search spec: {0}")]
    BadSpec(String),
    #[error("cannot access {path}: {msg}")]
    Io { path: String, msg: String },
    #[error("malformed file {path}: {msg}")]
    Malformed { path: String, msg: String },
}

/// Largest table order the search accepts.
pub const MAX_ORDER: usize = 16;

pub fn search_realizations(spec: &SearchSpec) -> Result<SearchOutcome, SearchError> {
    let nv = spec.target.order();
    let n = spec.order;
    if n == 0 || n > MAX_ORDER {
        return Err(SearchError::BadSpec(format!("order must be in 1..={MAX_ORDER}, got {n}")));
    }
    if n < nv {
        return Err(SearchError::BadSpec(format!("order {n} is below the {nv} target vertices")));
    }
    if spec.centrefree && n != nv {
        return Err(SearchError::BadSpec(format!(
            "a centrefree realization has exactly {nv} elements, not {n}"
        )));
    }
    if spec.workers == 0 {
        return Err(SearchError::BadSpec("at least one worker is needed".into()));
    }
    let started = Instant::now();
    let problem = Problem::new(&spec.target, n, spec.symmetry_cap.max(1));
    let nodes = AtomicU64::new(0);
    let stopped = AtomicBool::new(false);
    let limits = Limits {
        max_nodes: spec.budget.max_nodes,
        deadline: spec.budget.max_time.map(|d| started + d),
        nodes: &nodes,
        stopped: &stopped,
    };

    let jobs = match problem.root() {
        Some(root) => split(&problem, root, 8 * spec.workers, &limits),
        None => Some(Vec::new()),
    };
    let mut raw: Vec<Vec<u32>> = Vec::new();
    if let Some(jobs) = jobs {
        let results: Vec<Mutex<Vec<Vec<u32>>>> = jobs.iter().map(|_| Mutex::new(Vec::new())).collect();
        let jobs: Vec<Mutex<Option<State>>> = jobs.into_iter().map(|j| Mutex::new(Some(j))).collect();
        let next = AtomicUsize::new(0);
        std::thread::scope(|scope| {
            for _ in 0..spec.workers.min(jobs.len()).max(1) {
                scope.spawn(|| loop {
                    let i = next.fetch_add(1, Ordering::Relaxed);
                    let Some(slot) = jobs.get(i) else { break };
                    let job = slot.lock().expect("job lock").take().expect("each job runs once");
                    let mut found = Vec::new();
                    problem.explore(job, &limits, &mut |t| found.push(t));
                    *results[i].lock().expect("result lock") = found;
                });
            }
        });
        for r in results {
            raw.extend(r.into_inner().expect("result lock"));
        }
    }
    let exhausted = !stopped.load(Ordering::Relaxed);

    let mut verified: Vec<CayleyTable> = raw
        .into_iter()
        .filter_map(|entries| CayleyTable::new(n, entries).ok())
        .filter(|t| verify_candidate(t, &spec.target))
        .collect();
    verified.sort_by(|a, b| a.entries().cmp(b.entries()));
    verified.dedup();
    let solutions = verified.len();
    let representatives = match spec.dedup {
        Dedup::None => verified,
        Dedup::Iso | Dedup::IsoAndAnti => {
            let anti = spec.dedup == Dedup::IsoAndAnti;
            let mut reps: Vec<CayleyTable> = Vec::new();
            for t in verified {
                if !reps.iter().any(|r| find_equivalence(&t, r, anti).is_some()) {
                    reps.push(t);
                }
            }
            reps
        }
    };
    Ok(SearchOutcome {
        count_up_to_dedup: representatives.len(),
        representatives,
        solutions,
        nodes_explored: nodes.load(Ordering::Relaxed).min(spec.budget.max_nodes),
        exhausted,
        elapsed: started.elapsed(),
    })
}

/// Breadth-first expansion of the top of the tree until there are at least
/// `want` jobs or nothing is left to expand. `None` if a limit was hit.
fn split(problem: &Problem, root: State, want: usize, limits: &Limits) -> Option<Vec<State>> {
    let mut frontier = vec![root];
    while frontier.len() < want && frontier.iter().any(|s| !problem.is_complete(s)) {
        let mut next = Vec::new();
        for s in frontier {
            if problem.is_complete(&s) {
                next.push(s);
            } else {
                next.extend(problem.children(&s, limits)?);
            }
        }
        frontier = next;
    }
    Some(frontier)
}

/// Independent re-check: associative, centre exactly the elements after the
/// target's vertices, and commuting graph equal to the target with vertex
/// `i` at element `i`.
pub fn verify_candidate(t: &CayleyTable, target: &SimpleGraph) -> bool {
    let nv = target.order();
    let Ok(cg) = commuting_graph(t) else {
        return false;
    };
    cg.centre.iter().copied().eq(nv..t.order())
        && cg.vertex_to_element.iter().copied().eq(0..nv)
        && cg.graph.same_edges(target)
}
