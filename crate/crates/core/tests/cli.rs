use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn nclocus(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nclocus")).args(args).output().unwrap()
}

fn with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_nclocus"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

#[test]
fn theta_analysis() {
    let out = nclocus(&["analyze", "--example", "theta", "--all"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    assert_eq!(v["command"], "analyze");
    assert_eq!(v["result"]["surface"]["genus"], 2);
    assert_eq!(v["result"]["h1"]["free"], 4);
    assert_eq!(v["result"]["h1"]["torsion"], serde_json::json!([2]));
    assert_eq!(v["result"]["twoPeriodic"], true);
    assert_eq!(v["inputDigest"].as_str().unwrap().len(), 64);
}

#[test]
fn selected_sections_only() {
    let v = json(&nclocus(&["analyze", "--example", "theta", "--h1"]));
    let keys: Vec<&String> = v["result"].as_object().unwrap().keys().collect();
    assert_eq!(keys, ["h1"]);
}

#[test]
fn reports_are_deterministic() {
    for args in [
        &["analyze", "--example", "theta"][..],
        &["toric", "extract", "--example", "p3"][..],
        &["validate", "--example", "conifold"][..],
    ] {
        let a = nclocus(args);
        let b = nclocus(args);
        assert_eq!(a.stdout, b.stdout);
        assert_eq!(code(&a), 0);
    }
}

#[test]
fn extract_output_feeds_analyze() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p3.json");
    let out = nclocus(&["toric", "extract", "--example", "p3", "--output", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());

    let report: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let edges = report["result"]["graph"]["edges"].as_array().unwrap();
    assert_eq!(edges.len(), 6);
    assert!(edges.iter().all(|e| e["twist"] == 4));

    let out = nclocus(&["analyze", path.to_str().unwrap(), "--pencil", "--surface"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    assert_eq!(v["result"]["surface"]["genus"], 3);
    assert_eq!(v["result"]["nodalCurve"]["nodes"], 24);

    // the bare graph as well
    let graph = report["result"]["graph"].to_string();
    let out = with_stdin(&["analyze", "-", "--surface"], &graph);
    assert_eq!(json(&out)["result"]["surface"]["genus"], 3);
}

#[test]
fn quartic_mirror_pipeline() {
    let fan = nclocus(&["toric", "quartic-mirror"]);
    assert_eq!(code(&fan), 0);
    let out = with_stdin(&["toric", "extract"], std::str::from_utf8(&fan.stdout).unwrap());
    assert_eq!(code(&out), 0);
    let s = &json(&out)["result"]["summary"];
    assert_eq!((s["rays"].as_u64(), s["cones"].as_u64(), s["walls"].as_u64()), (Some(34), Some(64), Some(96)));
    assert_eq!(s["defectHistogram"], serde_json::json!({"0": 72, "1": 24}));
}

#[test]
fn invalid_graph_exits_one() {
    let graph = r#"{"vertices":[{"halfEdges":[0,1]}],"edges":[{"kind":"compact","ends":[0,1]}]}"#;
    let out = with_stdin(&["validate"], graph);
    assert_eq!(code(&out), 1);
    let v = json(&out);
    assert_eq!(v["result"]["valid"], false);
    assert!(v["diagnostics"][0].as_str().unwrap().contains("not trivalent"));
}

#[test]
fn malformed_input_exits_two() {
    assert_eq!(code(&with_stdin(&["validate"], "{\"vertices\": [")), 2);
    assert_eq!(code(&with_stdin(&["analyze"], "[1, 2, 3]")), 2);
    assert_eq!(code(&nclocus(&["analyze", "/nonexistent/graph.json"])), 2);
    assert_eq!(code(&nclocus(&["analyze", "--example", "nope"])), 2);
    assert_eq!(code(&nclocus(&["toric", "extract", "--example", "theta"])), 2);
}

#[test]
fn negative_defect_exits_one() {
    let mut g = nclocus::examples::theta();
    g.compact_edge_mut(0).unwrap().twist = -1;
    let out = with_stdin(&["analyze", "--pencil"], &g.to_json());
    assert_eq!(code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stderr).contains("NegativeDefect"));
    assert!(json(&out)["diagnostics"][0].as_str().unwrap().contains("NegativeDefect"));
}

#[test]
fn non_orientable_exits_one() {
    let mut g = nclocus::examples::theta();
    g.compact_edge_mut(0).unwrap().reversing = true;
    let out = with_stdin(&["analyze", "--h1"], &g.to_json());
    assert_eq!(code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stderr).contains("NonOrientable"));
}

#[test]
fn descent_diagram_input() {
    let d = nclocus::descent::assemble(&nclocus::examples::theta(), vec![nclocus::local::TwoPerV::one(); 2]).unwrap();
    let out = with_stdin(&["validate"], &d.to_json());
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["result"]["kind"], "descentDiagram");

    let mut v: Value = serde_json::from_str(&d.to_json()).unwrap();
    v["transitions"][0]["eps"] = 1.into();
    let out = with_stdin(&["validate"], &v.to_string());
    assert_eq!(code(&out), 1);
}
