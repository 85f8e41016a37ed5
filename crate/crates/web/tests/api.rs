use commgraph_web::{analyze_graph, cycle_realizer, group_graph, layout};
use serde_json::Value;

fn parse(s: String) -> Value {
    serde_json::from_str(&s).unwrap()
}

#[test]
fn group_graph_of_s4() {
    let v = parse(group_graph("S4"));
    assert_eq!(v["ok"], true);
    assert_eq!(v["decomposition"], "4K2+Comp(n=15,diam=3)");
    assert_eq!(v["labels"].as_array().unwrap().len(), 23);
    assert_eq!(v["positions"].as_array().unwrap().len(), 23);
}

#[test]
fn group_errors_are_reported() {
    for bad in ["X3", "@/etc/passwd", "GL(2,9)"] {
        let v = parse(group_graph(bad));
        assert_eq!(v["ok"], false, "{bad}");
        assert!(v["error"].is_string());
    }
}

#[test]
fn analyze_c5() {
    let v = parse(analyze_graph("C5"));
    assert_eq!(v["semigroup"]["passed"], true);
    assert_eq!(v["centrefree"]["passed"], false);
    assert_eq!(v["group"]["passed"], false);
    assert_eq!(v["realization"]["order"], 7);
}

#[test]
fn analyze_graph_text_and_obstruction() {
    let v = parse(analyze_graph("graph 3\ne 0 1\ne 1 2\n"));
    assert_eq!(v["ok"], true);
    assert_eq!(v["semigroup"]["passed"], false);
    assert_eq!(v["realization"]["ok"], false);
    assert_eq!(parse(analyze_graph("graph 2\ne 0 5\n"))["ok"], false);
}

#[test]
fn cycle_realizers() {
    let v = parse(cycle_realizer(8));
    assert_eq!(v["ok"], true);
    assert_eq!(v["rows"].as_array().unwrap().len(), 8);
    assert_eq!(v["edges"].as_array().unwrap().len(), 8);
    assert_eq!(parse(cycle_realizer(6))["ok"], false);
}

#[test]
fn layout_stays_in_the_unit_square() {
    let g = commgraph::graph::build_graph(&"3K2+4K4+K1+C7".parse().unwrap()).unwrap();
    for p in layout(&g) {
        assert!((0.0..=1.0).contains(&p[0]) && (0.0..=1.0).contains(&p[1]), "{p:?}");
    }
}
