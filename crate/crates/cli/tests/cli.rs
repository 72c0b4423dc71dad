use std::process::{Command, Output};

use bellgraph::graph6::{decode, encode};
use bellgraph::{is_isomorphic, Graph};
use serde_json::Value;

fn bellgraph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bellgraph"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn tmp(name: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("bellgraph-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn build_json_and_dot() {
    let p3 = encode(&Graph::path(3));
    let out = bellgraph(&["build", &p3]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["vertices"].as_array().unwrap().len(), 2);
    assert_eq!(v["variant"], "full");

    let out = bellgraph(&["build", &p3, "--format", "dot"]);
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .starts_with("graph B {"));

    let out = bellgraph(&["build", &p3, "--variant", "at-most"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn reconstruct_from_a_built_file() {
    let c5 = Graph::cycle(5);
    let file = tmp("c5.json");
    let out = bellgraph(&[
        "build",
        &encode(&c5),
        "--scramble",
        "4",
        "--out",
        file.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let out = bellgraph(&["reconstruct", file.to_str().unwrap(), "--mode", "full"]);
    assert!(out.status.success());
    let g = decode(json(&out)["result"].as_str().unwrap()).unwrap();
    assert!(is_isomorphic(&g, &c5));
}

#[test]
fn reconstruct_from_a_host() {
    let e5 = encode(&Graph::empty(5));
    let out = bellgraph(&[
        "reconstruct",
        "--mode",
        "lower",
        "--host",
        &e5,
        "--k",
        "3",
        "--seed",
        "2",
    ]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["regime"], "k_gt_chi_plus_1");
    assert!(is_isomorphic(
        &decode(v["result"].as_str().unwrap()).unwrap(),
        &Graph::empty(5)
    ));

    let out = bellgraph(&[
        "reconstruct",
        "--mode",
        "upper-auto",
        "--host",
        &encode(&Graph::cycle(5)),
        "--k",
        "4",
    ]);
    assert_eq!(json(&out)["regime"], "k_eq_n_minus_1");
}

#[test]
fn classify_reports_oracle() {
    let p3 = encode(&Graph::path(3));
    let out = bellgraph(&[
        "classify", "--g1", &p3, "--k1", "2", "--g2", &p3, "--k2", "2",
    ]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["equivalent"], true);
    assert_eq!(v["oracle"], true);

    let out = bellgraph(&[
        "classify",
        "--g1",
        &p3,
        "--k1",
        "1",
        "--g2",
        "Bw",
        "--k2",
        "1",
        "--no-oracle",
    ]);
    assert_eq!(json(&out)["oracle"], Value::Null);
}

#[test]
fn graphs_from_files() {
    let file = tmp("e8.g6");
    std::fs::write(&file, format!("{}\n", encode(&Graph::empty(8)))).unwrap();
    let out = bellgraph(&["find-partition", file.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(json(&out)["sizes"], serde_json::json!([8]));

    let out = bellgraph(&["find-partition", &encode(&Graph::cycle(5))]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_exit_codes() {
    let out = bellgraph(&["verify", "--suite", "core", "--nmax", "4"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["suite"], "core");
    assert_eq!(v["failures"], serde_json::json!([]));

    assert_eq!(
        bellgraph(&["verify", "--suite", "nope", "--nmax", "3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        bellgraph(&["verify", "--suite", "classify", "--nmax", "9"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn conjecture_writes_a_report() {
    let file = tmp("conj.json");
    let out = bellgraph(&["conjecture", "--nmax", "2", "--out", file.to_str().unwrap()]);
    assert!(out.status.success());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&file).unwrap()).unwrap();
    assert_eq!(v["counterexample_count"], 0);

    // the sweep finds coincidences among complete Bell graphs at four vertices
    assert_eq!(
        bellgraph(&["conjecture", "--nmax", "4"]).status.code(),
        Some(1)
    );
}
