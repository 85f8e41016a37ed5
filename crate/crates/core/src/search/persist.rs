//! Search results on disk: one table file per representative plus
//! `manifest.json`.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::{verify_candidate, Dedup, SearchError, SearchOutcome, SearchSpec};
use crate::graph::SimpleGraph;
use crate::table::CayleyTable;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Manifest {
    /// SHA-256 of the target's text form.
    pub target_sha256: String,
    pub target: String,
    pub order: usize,
    pub centrefree: bool,
    pub dedup: Dedup,
    pub max_nodes: u64,
    pub count_up_to_dedup: usize,
    pub solutions: usize,
    pub nodes_explored: u64,
    pub exhausted: bool,
    pub tables: Vec<String>,
}

fn io_err(path: &Path, e: impl std::fmt::Display) -> SearchError {
    SearchError::Io {
        path: path.display().to_string(),
        msg: e.to_string(),
    }
}

pub fn target_hash(g: &SimpleGraph) -> String {
    Sha256::digest(g.to_text().as_bytes())
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

pub fn save_outcome(dir: &Path, spec: &SearchSpec, outcome: &SearchOutcome) -> Result<Manifest, SearchError> {
    fs::create_dir_all(dir).map_err(|e| io_err(dir, e))?;
    let mut tables = Vec::new();
    for (i, t) in outcome.representatives.iter().enumerate() {
        let name = format!("rep_{i:04}.tbl");
        let path = dir.join(&name);
        fs::write(&path, t.to_text()).map_err(|e| io_err(&path, e))?;
        tables.push(name);
    }
    let manifest = Manifest {
        target_sha256: target_hash(&spec.target),
        target: spec.target.to_text(),
        order: spec.order,
        centrefree: spec.centrefree,
        dedup: spec.dedup,
        max_nodes: spec.budget.max_nodes,
        count_up_to_dedup: outcome.count_up_to_dedup,
        solutions: outcome.solutions,
        nodes_explored: outcome.nodes_explored,
        exhausted: outcome.exhausted,
        tables,
    };
    let path = dir.join("manifest.json");
    let json = serde_json::to_string_pretty(&manifest).expect("manifest serializes");
    fs::write(&path, json + "\n").map_err(|e| io_err(&path, e))?;
    Ok(manifest)
}

/// Reads a saved result and re-verifies every table against the target
/// recorded in the manifest.
pub fn load_outcome(dir: &Path) -> Result<(Manifest, Vec<CayleyTable>), SearchError> {
    let path = dir.join("manifest.json");
    let text = fs::read_to_string(&path).map_err(|e| io_err(&path, e))?;
    let malformed = |path: &Path, msg: String| SearchError::Malformed {
        path: path.display().to_string(),
        msg,
    };
    let manifest: Manifest = serde_json::from_str(&text).map_err(|e| malformed(&path, e.to_string()))?;
    let target = SimpleGraph::parse(&manifest.target).map_err(|e| malformed(&path, e.to_string()))?;
    if target_hash(&target) != manifest.target_sha256 {
        return Err(malformed(&path, "target hash mismatch".into()));
    }
    let mut tables = Vec::new();
    for name in &manifest.tables {
        let p = dir.join(name);
        let text = fs::read_to_string(&p).map_err(|e| io_err(&p, e))?;
        let t = CayleyTable::parse(&text).map_err(|e| malformed(&p, e.to_string()))?;
        if t.order() != manifest.order || !verify_candidate(&t, &target) {
            return Err(malformed(&p, "table does not realize the target".into()));
        }
        tables.push(t);
    }
    Ok((manifest, tables))
}
