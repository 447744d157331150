//! End-to-end tests of the command-line interface: output formats, the
//! JSON schema, determinism and the exit-status contract.

use std::io::Write;
use std::process::{Command, Output};

fn ncgraph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ncgraph"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn build_json_schema_for_the_path_instance() {
    let out = ncgraph(&["build", "--cyclic", "4", "--h", "2", "--format", "json"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["n"], 4);
    assert_eq!(doc["h"], 2);
    let vertices = doc["vertices"].as_array().unwrap();
    assert_eq!(vertices.len(), 3);
    let orders: Vec<u64> = vertices
        .iter()
        .map(|v| v["order"].as_u64().unwrap())
        .collect();
    assert_eq!(orders, vec![4, 2, 4]);
    assert_eq!(doc["edges"].as_array().unwrap().len(), 2);
}

#[test]
fn build_json_round_trips() {
    let out = ncgraph(&["build", "--cyclic", "12", "--h", "6", "--format", "json"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    // reconstruct and compare with the library's in-memory graph
    let built = ncgraph::ncg::build_cyclic_gncg(12, 6).unwrap();
    let mut expected = built.graph.edges();
    expected.sort_unstable();
    let loaded: Vec<(usize, usize)> = doc["edges"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| {
            let pair = e.as_array().unwrap();
            (
                pair[0].as_u64().unwrap() as usize,
                pair[1].as_u64().unwrap() as usize,
            )
        })
        .collect();
    assert_eq!(loaded, expected);
    // edges are sorted with i < j
    for w in loaded.windows(2) {
        assert!(w[0] < w[1]);
    }
    for &(a, b) in &loaded {
        assert!(a < b);
    }
    for (v, vertex) in doc["vertices"].as_array().unwrap().iter().enumerate() {
        assert_eq!(vertex["id"].as_u64().unwrap(), built.vertices[v].element as u64);
        assert_eq!(vertex["order"].as_u64().unwrap(), built.vertices[v].order);
        assert_eq!(vertex["in_h"].as_bool().unwrap(), built.vertices[v].in_h);
    }
}

#[test]
fn dot_output_is_deterministic_and_ordered() {
    let a = ncgraph(&["build", "--cyclic", "30", "--h", "6", "--format", "dot"]);
    let b = ncgraph(&["build", "--cyclic", "30", "--h", "6", "--format", "dot"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert!(text.starts_with("graph ncg {"));
    // vertex declarations appear in element order
    let positions: Vec<usize> = (0..29).map(|v| text.find(&format!("v{v} [")).unwrap()).collect();
    for w in positions.windows(2) {
        assert!(w[0] < w[1]);
    }
    // H members get the distinct shape
    assert!(text.contains("[label=\"5:6\", shape=box]"));
    assert!(text.contains("[label=\"1:30\", shape=ellipse]"));
}

#[test]
fn classify_agrees_on_the_split_example() {
    let out = ncgraph(&["classify", "--cyclic", "6", "--h", "6"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("split"));
    assert!(text.contains("claw_free"));
    assert!(!text.contains("DISAGREE"), "{text}");
}

#[test]
fn sweep_csv_has_the_contract_header() {
    let out = ncgraph(&["sweep", "--max-n", "12", "--format", "csv"]);
    assert!(out.status.success(), "paper-delta rows are allowlisted");
    let text = stdout(&out);
    assert!(text.starts_with("n,h,group,subgroup,property,predicted,oracle,agree,witness\n"));
    assert!(text.contains("6,2,Z6,Z2,max_degree_paper,3,2,no,"));
}

#[test]
fn sweep_exit_3_when_allowlist_is_cleared() {
    let out = ncgraph(&["sweep", "--max-n", "12", "--allow", "none"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn verify_nilpotent_exits_clean() {
    let out = ncgraph(&["verify", "--suite", "nilpotent"]);
    assert!(out.status.success());
    let text = stdout(&out);
    // the negative control shows up as an expected failure row
    assert!(text.contains("negative_control_failed,true,true,yes"));
}

#[test]
fn malformed_table_exits_1() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "3\n0 1 2\n1 2 0\n2 0 1\nbroken").unwrap();
    writeln!(f, "this is not a multiplication table").unwrap();
    let out = ncgraph(&[
        "build",
        "--cyclic",
        "0",
        "--h",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let path = f.path().to_str().unwrap().to_string();
    let out = ncgraph(&["build", "--table", &path, "--h", "2"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn valid_table_builds() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    // Z3 as an explicit table
    writeln!(f, "3\n0 1 2\n1 2 0\n2 0 1").unwrap();
    let path = f.path().to_str().unwrap().to_string();
    let out = ncgraph(&["build", "--table", &path, "--h", "3", "--format", "json"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["vertices"].as_array().unwrap().len(), 2);
    assert_eq!(doc["edges"].as_array().unwrap().len(), 1);
}

#[test]
fn oversized_product_exits_2() {
    let out = ncgraph(&["build", "--product", "101x101", "--h", "101"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn product_group_p3_instance() {
    // Z2 x Z2 with an order-2 subgroup gives P3, matching (Z4, Z2)
    let out = ncgraph(&[
        "build",
        "--product",
        "2x2",
        "--subgroup-index",
        "1",
        "--format",
        "json",
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["vertices"].as_array().unwrap().len(), 3);
    assert_eq!(doc["edges"].as_array().unwrap().len(), 2);
}

#[test]
fn gk_and_commuting_builds_need_no_subgroup() {
    let out = ncgraph(&["build", "--cyclic", "30", "--graph", "gk", "--format", "dot"]);
    assert!(out.status.success());
    let text = stdout(&out);
    for p in ["2", "3", "5"] {
        assert!(text.contains(&format!("label=\"{p}\"")));
    }
    let out = ncgraph(&["build", "--catalog", "S3", "--graph", "commuting", "--format", "json"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["n"], 5);
}

#[test]
fn reduce_prints_a_trace() {
    let out = ncgraph(&["reduce", "--cyclic", "12", "--h", "6"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("twin of"));
    assert!(text.contains("reduced graph:"));
}
