use std::fs;
use std::process::{Command, Output};

fn commgraph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_commgraph")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn build_then_table() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("a5.tbl");
    let p = path.to_str().unwrap();
    assert!(commgraph(&["build", "A5", "--out", p]).status.success());
    let o = commgraph(&["table", p]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("decomposition: 10K2+5K3+6K4"));
    let j: serde_json::Value = serde_json::from_slice(&commgraph(&["--json", "table", p]).stdout).unwrap();
    assert_eq!(j["decomposition"]["rendering"], "10K2+5K3+6K4");
    assert_eq!(j["vertices"], 59);
}

#[test]
fn gate_exit_codes() {
    assert_eq!(commgraph(&["gate", "petersen", "--target", "group"]).status.code(), Some(1));
    assert_eq!(commgraph(&["gate", "5K1+K4", "--target", "group"]).status.code(), Some(0));
    assert_eq!(commgraph(&["gate", "C5", "--target", "centrefree"]).status.code(), Some(1));
    assert_eq!(commgraph(&["gate", "nonsense", "--target", "group"]).status.code(), Some(2));
    assert_eq!(commgraph(&["gate", "C5", "--target", "ring"]).status.code(), Some(2));
}

#[test]
fn realize_from_a_graph_file() {
    let dir = tempfile::tempdir().unwrap();
    // a 4-cycle listed out of order: 0-2-1-3-0
    let g = dir.path().join("c4.txt");
    fs::write(&g, "graph 4\ne 0 2\ne 2 1\ne 1 3\ne 3 0\n").unwrap();
    let t = dir.path().join("t.tbl");
    let o = commgraph(&["realize", g.to_str().unwrap(), "--cycle", "--out", t.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let j: serde_json::Value = serde_json::from_slice(&commgraph(&["--json", "table", t.to_str().unwrap()]).stdout).unwrap();
    assert_eq!(j["centre"].as_array().unwrap().len(), 0);
    assert_eq!(j["decomposition"]["rendering"], "Comp(n=4,diam=2)");

    assert_eq!(commgraph(&["realize", "C6", "--cycle"]).status.code(), Some(1));
    assert_eq!(commgraph(&["realize", "K3"]).status.code(), Some(1));
    assert!(commgraph(&["realize", "C6"]).status.success());
}

#[test]
fn search_and_save() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("c8");
    let o = commgraph(&["search", "C8", "--order", "8", "--centrefree", "--out", out.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("classes: 1\n"));
    let manifest: serde_json::Value = serde_json::from_str(&fs::read_to_string(out.join("manifest.json")).unwrap()).unwrap();
    assert_eq!(manifest["exhausted"], true);
    assert_eq!(manifest["tables"].as_array().unwrap().len(), 1);

    let none = commgraph(&["search", "C5", "--order", "5", "--centrefree"]);
    assert_eq!(none.status.code(), Some(1));
    assert!(stdout(&none).contains("exhausted: true"));
}

#[test]
fn outputs_are_reproducible() {
    let args = ["--json", "search", "E2", "--order", "4", "--dedup", "none", "--workers", "1"];
    let a = commgraph(&args);
    let mut more = args.to_vec();
    let last = more.len() - 1;
    more[last] = "3";
    let b = commgraph(&more);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn export_dot() {
    let o = commgraph(&["export-dot", "K3"]);
    let s = stdout(&o);
    assert!(s.starts_with("graph {"));
    assert_eq!(s.matches(" -- ").count(), 3);
}

#[test]
fn semidirect_from_action_file() {
    let dir = tempfile::tempdir().unwrap();
    let action = dir.path().join("inv.txt");
    // Z2 acting on Z5 by inversion
    fs::write(&action, "action 2 5\n0 1 2 3 4\n0 4 3 2 1\n").unwrap();
    let t = dir.path().join("d10.tbl");
    let o = commgraph(&["semidirect", "Z5", "Z2", action.to_str().unwrap(), "--out", t.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&commgraph(&["table", t.to_str().unwrap()])).contains("decomposition: 5K1+1K4"));

    fs::write(&action, "action 2 5\n0 1 2 3 4\n0 2 1 3 4\n").unwrap();
    assert_eq!(commgraph(&["semidirect", "Z5", "Z2", action.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn scan_a_directory() {
    let dir = tempfile::tempdir().unwrap();
    for g in ["S3", "Q8", "Z4"] {
        let p = dir.path().join(format!("{g}.tbl"));
        assert!(commgraph(&["build", g, "--out", p.to_str().unwrap()]).status.success());
    }
    let o = commgraph(&["--json", "scan", dir.path().to_str().unwrap(), "--predicate", "decomposition=3K2"]);
    let j: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let matched: Vec<&str> = j["entries"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|e| e["matched"] == true)
        .map(|e| e["file"].as_str().unwrap())
        .collect();
    assert_eq!(matched, ["Q8.tbl"]);
}

#[test]
fn quick_verification_passes() {
    let o = commgraph(&["verify", "--suite", "quick"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("Γ(A_5)=10K2+5K3+6K4: PASS"));
    assert!(s.contains("Γ(GL(2,3))=6K2+4K4+3K6: PASS"));
}

#[test]
fn full_verification_reports_the_c4_class_count() {
    let o = commgraph(&["verify-paper", "--suite", "full"]);
    let s = stdout(&o);
    assert!(s.contains("C_6 at order 7: 0 realizations, exhausted: PASS"));
    assert!(s.contains("C_4 at order 4, centrefree: 1 class up to anti-isomorphism, exhausted: FAIL (2 classes"));
    assert_eq!(o.status.code(), Some(1));
}
