//! Scanning a directory of group tables.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use serde::Serialize;

use super::SearchError;
use crate::commuting::commuting_graph;
use crate::table::{CayleyTable, MagmaClass};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum ScanPredicate {
    /// The commuting graph has at least one vertex and one component.
    ConnectedCommutingGraph,
    /// The decomposition renders exactly as the given string.
    Decomposition(String),
}

impl FromStr for ScanPredicate {
    type Err = SearchError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "connected" || s == "connected_commuting_graph" {
            return Ok(ScanPredicate::ConnectedCommutingGraph);
        }
        if let Some(r) = s.strip_prefix("decomposition=") {
            return Ok(ScanPredicate::Decomposition(r.to_string()));
        }
        Err(SearchError::BadSpec(format!(
            "unknown predicate {s:?}; use `connected` or `decomposition=<rendering>`"
        )))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorpusEntry {
    pub file: String,
    pub order: usize,
    pub class: MagmaClass,
    /// `None` for skipped non-groups.
    pub centre_size: Option<usize>,
    pub vertices: Option<usize>,
    pub decomposition: Option<String>,
    pub matched: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct CorpusReport {
    pub entries: Vec<CorpusEntry>,
    pub skipped_non_groups: usize,
    /// Per group order: (groups scanned, groups matched).
    pub by_order: BTreeMap<usize, (usize, usize)>,
}

impl CorpusReport {
    pub fn matches(&self) -> impl Iterator<Item = &CorpusEntry> {
        self.entries.iter().filter(|e| e.matched)
    }
}

/// Scans every non-hidden regular file of `dir` in name order. Non-groups
/// are reported and skipped; an unparsable file is an error.
pub fn corpus_scan(dir: &Path, predicate: &ScanPredicate) -> Result<CorpusReport, SearchError> {
    let io = |e: std::io::Error| SearchError::Io {
        path: dir.display().to_string(),
        msg: e.to_string(),
    };
    let mut files: Vec<_> = fs::read_dir(dir)
        .map_err(io)?
        .collect::<Result<Vec<_>, _>>()
        .map_err(io)?
        .into_iter()
        .filter(|e| e.file_type().is_ok_and(|t| t.is_file()))
        .filter(|e| !e.file_name().to_string_lossy().starts_with('.'))
        .map(|e| e.path())
        .collect();
    files.sort();
    let mut report = CorpusReport::default();
    for path in files {
        let name = path.file_name().expect("a file").to_string_lossy().into_owned();
        let malformed = |msg: String| SearchError::Malformed {
            path: path.display().to_string(),
            msg,
        };
        let text = fs::read_to_string(&path).map_err(|e| malformed(e.to_string()))?;
        let t = CayleyTable::parse(&text).map_err(|e| malformed(e.to_string()))?;
        let class = t.classify();
        if class != MagmaClass::Group {
            report.skipped_non_groups += 1;
            report.entries.push(CorpusEntry {
                file: name,
                order: t.order(),
                class,
                centre_size: None,
                vertices: None,
                decomposition: None,
                matched: false,
            });
            continue;
        }
        let cg = commuting_graph(&t).expect("groups are associative");
        let d = cg.graph.decompose();
        let matched = match predicate {
            ScanPredicate::ConnectedCommutingGraph => {
                cg.graph.order() > 0 && d.cliques.iter().map(|c| c.1).sum::<usize>() + d.other_components.len() == 1
            }
            ScanPredicate::Decomposition(r) => d.rendering == *r,
        };
        let slot = report.by_order.entry(t.order()).or_default();
        slot.0 += 1;
        slot.1 += usize::from(matched);
        report.entries.push(CorpusEntry {
            file: name,
            order: t.order(),
            class,
            centre_size: Some(cg.centre.len()),
            vertices: Some(cg.graph.order()),
            decomposition: Some(d.rendering),
            matched,
        });
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{build_group, GroupSpec};

    #[test]
    fn empty_directory_gives_empty_report() {
        let dir = tempfile::tempdir().unwrap();
        let r = corpus_scan(dir.path(), &ScanPredicate::ConnectedCommutingGraph).unwrap();
        assert_eq!(r, CorpusReport::default());
    }

    #[test]
    fn scans_groups_and_skips_semigroups() {
        let dir = tempfile::tempdir().unwrap();
        for (name, spec) in [("a.tbl", GroupSpec::Symmetric(3)), ("b.tbl", GroupSpec::Cyclic(4))] {
            fs::write(dir.path().join(name), build_group(&spec).unwrap().to_text()).unwrap();
        }
        fs::write(dir.path().join("c.tbl"), CayleyTable::from_fn(2, |a, _| a).unwrap().to_text()).unwrap();
        let r = corpus_scan(dir.path(), &ScanPredicate::Decomposition("3K1+1K2".into())).unwrap();
        assert_eq!(r.skipped_non_groups, 1);
        assert_eq!(r.matches().map(|e| e.file.as_str()).collect::<Vec<_>>(), ["a.tbl"]);
        assert_eq!(r.by_order[&6], (1, 1));
        let connected = corpus_scan(dir.path(), &ScanPredicate::ConnectedCommutingGraph).unwrap();
        assert_eq!(connected.matches().count(), 0);
    }

    #[test]
    fn malformed_file_is_an_error() {
        let dir = tempfile::tempdir().unwrap();
        fs::write(dir.path().join("bad.tbl"), "magma 2\n0 1\n").unwrap();
        assert!(matches!(
            corpus_scan(dir.path(), &ScanPredicate::ConnectedCommutingGraph),
            Err(SearchError::Malformed { .. })
        ));
    }

    #[test]
    fn predicate_strings() {
        assert_eq!("connected".parse::<ScanPredicate>().unwrap(), ScanPredicate::ConnectedCommutingGraph);
        assert_eq!(
            "decomposition=3K2".parse::<ScanPredicate>().unwrap(),
            ScanPredicate::Decomposition("3K2".into())
        );
        assert!("planar".parse::<ScanPredicate>().is_err());
    }
}
