use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lambda-cdp"))
        .args(args)
        .env_remove("LAMBDA_CDP_MAX_N")
        .output()
        .expect("binary runs")
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    std::fs::File::create(&path).unwrap().write_all(text.as_bytes()).unwrap();
    path.to_str().unwrap().to_string()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn keys(v: &Value) -> Vec<&str> {
    let mut k: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    k.sort_unstable();
    k
}

#[test]
fn analyze_cubic_text() {
    let out = run(&["analyze", data("cubic12.txt").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("I = 1.0397"));
    assert!(text.contains("CDP (D = 2): {1, 2, 3, 4, 5, 6} | {7, 8, 9} | {10, 11, 12}"));
}

#[test]
fn analyze_json_schema() {
    let out = run(&["analyze", data("p3.txt").to_str().unwrap(), "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(
        keys(&v),
        ["eigenvalues", "graph", "log_base", "matrix", "schema_version", "singular", "singular_note", "tolerances"]
    );
    assert_eq!(keys(&v["graph"]), ["edge_count", "n", "nullity", "orbital_entropy", "orbits"]);
    assert_eq!(
        keys(&v["eigenvalues"][0]),
        [
            "bounds",
            "cdp_blocks",
            "cdp_orbit_refinement",
            "core",
            "core_forbidden",
            "core_orbit_consistent",
            "d_max",
            "divisor_matrix",
            "entropy",
            "equitable",
            "lambda",
            "multiplicity",
            "remote_core_forbidden",
        ]
    );
    let singular = &v["singular"];
    assert_eq!(singular["eta"], 1);
    assert_eq!(singular["slim"], true);
    assert_eq!(singular["minimal_configuration"], true);
}

#[test]
fn laplacian_of_an_edge() {
    let dir = TempDir::new().unwrap();
    let k2 = write(&dir, "k2.txt", "n 2\ne 1 2\n");
    let out = run(&["analyze", &k2, "--preset", "laplacian", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let values: Vec<f64> = v["eigenvalues"].as_array().unwrap().iter().map(|c| c["lambda"].as_f64().unwrap()).collect();
    assert_eq!(values.len(), 2);
    assert!(values[0].abs() < 1e-12 && (values[1] - 2.0).abs() < 1e-12);
    assert!(v["singular"].is_null());
}

#[test]
fn reports_are_deterministic() {
    let file = data("cubic12.txt");
    for format in ["text", "json"] {
        let a = run(&["analyze", file.to_str().unwrap(), "--format", format]);
        let b = run(&["analyze", file.to_str().unwrap(), "--format", format]);
        assert_eq!(a.stdout, b.stdout);
    }
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.txt", "n 2\ne 1 1\n");
    let split = write(&dir, "split.txt", "n 4\ne 1 2\ne 3 4\n");
    let cubic = data("cubic12.txt");
    let cubic = cubic.to_str().unwrap();
    let p3 = data("p3.txt");
    let p3 = p3.to_str().unwrap();
    let code = |args: &[&str]| run(args).status.code();
    assert_eq!(code(&["analyze", &bad]), Some(1));
    assert_eq!(code(&["analyze", "/nonexistent/graph.txt"]), Some(1));
    assert_eq!(code(&["analyze", cubic, "--gamma", "0,1,0,0"]), Some(1));
    assert_eq!(code(&["analyze", cubic, "--bogus"]), Some(1));
    assert_eq!(code(&["analyze", &split]), Some(2));
    assert_eq!(code(&["analyze", cubic, "--lambda", "0.5"]), Some(3));
    // P3 at sqrt 2: one block, degrees 1 and 2
    assert_eq!(code(&["reconstruct", p3, "--lambda", "1.414", "--mu", "1.414"]), Some(4));
    assert_eq!(code(&["reconstruct", p3, "--lambda", "-1.414", "--mu", "1", "--huckel", "0", "-1"]), Some(4));
    assert_eq!(code(&["reconstruct", cubic, "--lambda", "1", "--mu", "5"]), Some(5));
    assert_eq!(code(&["coalesce", p3, "2", p3, "1"]), Some(6));
    let err = String::from_utf8(run(&["analyze", &split]).stderr).unwrap();
    assert_eq!(err.lines().count(), 1);
}

#[test]
fn reconstruct_cubic() {
    let out = run(&["reconstruct", data("cubic12.txt").to_str().unwrap(), "--lambda", "1", "--mu", "3", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["index_layers"], serde_json::json!([[1, 2, 3]]));
    assert_eq!(v["mu_cdp"].as_array().unwrap().len(), 1);
}

#[test]
fn bounds_table() {
    let out = run(&["bounds", "12"]);
    let text = stdout(&out);
    let row: Vec<f64> = text.lines().nth(6).unwrap().split(',').map(|x| x.parse().unwrap()).collect();
    assert_eq!(row[0], 6.0);
    assert!((row[1] - std::f64::consts::LN_2).abs() < 1e-3 && (row[2] - 1.5890).abs() < 1e-3);
    assert_eq!(text.lines().last().unwrap(), "12,0,0");
    assert_eq!(run(&["bounds", "0"]).status.code(), Some(3));
}

#[test]
fn coalesce_paths_and_cycles() {
    let p3 = data("p3.txt");
    let out = run(&["coalesce", p3.to_str().unwrap(), "1", p3.to_str().unwrap(), "1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["result"]["eta"], 1);
    assert_eq!(v["graph"]["edges"], serde_json::json!([[1, 2], [1, 4], [2, 3], [4, 5]]));
    let c4 = data("c4.json");
    let out = run(&["coalesce", c4.to_str().unwrap(), "1", c4.to_str().unwrap(), "1", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!((v["result"]["n"].as_u64(), v["result"]["eta"].as_u64(), v["result"]["core_size"].as_u64()), (Some(7), Some(3), Some(7)));
}

#[test]
fn orbits_and_vertex_cap() {
    let cubic = data("cubic12.txt");
    let out = run(&["orbits", cubic.to_str().unwrap()]);
    assert!(stdout(&out).contains("orbits: {1, 3, 4, 6} | {2, 5} | {7, 9} | {8} | {10, 12} | {11}"));
    let capped = Command::new(env!("CARGO_BIN_EXE_lambda-cdp"))
        .args(["orbits", cubic.to_str().unwrap()])
        .env("LAMBDA_CDP_MAX_N", "8")
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(3));
}
