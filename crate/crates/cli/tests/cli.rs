use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn starspec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_starspec"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn write_graph(dir: &TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

fn read_json(path: &Path) -> Value {
    serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn extremal_writes_edges_and_summary() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().to_str().unwrap();
    let o = starspec(&["extremal", "--kind", "gstar", "-n", "10", "-m", "2", "-b", "1", "--out", out]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));

    let edges = fs::read_to_string(dir.path().join("gstar.edges")).unwrap();
    assert_eq!(edges.lines().next(), Some("10 37"));
    assert_eq!(edges.lines().count(), 38);

    let summary = read_json(&dir.path().join("summary.json"));
    assert_eq!(summary["edges"], 37);
    assert_eq!(summary["wiener"], 53);
    let sizes: Vec<u64> = summary["blocks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|b| b["size"].as_u64().unwrap())
        .collect();
    assert_eq!(sizes, [1, 8, 1]);
}

#[test]
fn extremal_rejects_bad_parameters() {
    let o = starspec(&["extremal", "--kind", "gstar", "-n", "5", "-m", "2", "-b", "2"]);
    assert_eq!(code(&o), 2);
    let o = starspec(&["extremal", "--kind", "g1", "-n", "27", "-m", "2"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(code(&starspec(&["bogus"])), 2);
    assert_eq!(code(&starspec(&["search", "--theorem", "nope", "-n", "27", "-m", "2", "-b", "1"])), 2);
    assert_eq!(code(&starspec(&["spectra", "--graph", "/nonexistent/graph.edges"])), 2);

    let dir = TempDir::new().unwrap();
    let bad = write_graph(&dir, "bad.edges", "garbage\n");
    let o = starspec(&["spectra", "--graph", &bad]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 1"));
}

#[test]
fn factor_search_and_verification() {
    let dir = TempDir::new().unwrap();
    let path3 = write_graph(&dir, "p3.edges", "3 2\n0 1\n0 2\n");

    let o = starspec(&["factor", "--graph", &path3, "-m", "2", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert_eq!(read_json(&dir.path().join("summary.json"))["status"], "yes");
    let factor = read_json(&dir.path().join("factor.json"));
    assert_eq!(factor[0]["center"], 0);

    // a K_{1,2} cannot be covered by stars with at least three leaves
    assert_eq!(code(&starspec(&["factor", "--graph", &path3, "-m", "3"])), 1);

    let good = write_graph(&dir, "good.json", r#"[{"center":0,"leaves":[1,2]}]"#);
    assert_eq!(code(&starspec(&["factor", "--graph", &path3, "-m", "2", "--verify", &good])), 0);
    let wrong = write_graph(&dir, "wrong.json", r#"[{"center":1,"leaves":[0,2]}]"#);
    assert_eq!(code(&starspec(&["factor", "--graph", &path3, "-m", "2", "--verify", &wrong])), 1);
}

#[test]
fn toughness_threshold_sets_exit_code() {
    let dir = TempDir::new().unwrap();
    let path3 = write_graph(&dir, "p3.edges", "3 2\n0 1\n0 2\n");

    let o = starspec(&["toughness", "--graph", &path3, "--at-least", "1/3"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["toughness"], "1/2");

    assert_eq!(code(&starspec(&["toughness", "--graph", &path3, "--at-least", "1/1"])), 1);
    assert_eq!(code(&starspec(&["toughness", "--graph", &path3, "--at-least", "one"])), 2);
}

#[test]
fn spectra_of_a_path() {
    let dir = TempDir::new().unwrap();
    let path3 = write_graph(&dir, "p3.edges", "3 2\n0 1\n0 2\n");
    let o = starspec(&["--format", "json", "spectra", "--graph", &path3]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let rho = v["adjacency"]["value"].as_f64().unwrap();
    let q = v["signless"]["value"].as_f64().unwrap();
    let mu = v["distance"]["value"].as_f64().unwrap();
    assert!((rho - 2f64.sqrt()).abs() < 1e-8);
    assert!((q - 3.0).abs() < 1e-8);
    assert!((mu - (1.0 + 3f64.sqrt())).abs() < 1e-8);
    assert_eq!(v["wiener"], 4);
}

#[test]
fn spectra_matrices_need_out_dir() {
    let dir = TempDir::new().unwrap();
    let path3 = write_graph(&dir, "p3.edges", "3 2\n0 1\n0 2\n");
    assert_eq!(code(&starspec(&["spectra", "--graph", &path3, "--matrices"])), 2);

    let out = dir.path().join("m");
    let o = starspec(&["spectra", "--graph", &path3, "--matrices", "--out", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let d = fs::read_to_string(out.join("distance.csv")).unwrap();
    assert_eq!(d.lines().nth(1).unwrap().trim(), "1,0,2");
}

#[test]
fn verify_commands_pass_on_small_grids() {
    let o = starspec(&[
        "verify-identities",
        "--m-values",
        "2",
        "--b-values",
        "1",
        "--n-max",
        "12",
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let csv = String::from_utf8(o.stdout).unwrap();
    assert!(csv.starts_with("point,theorem,n,m,b,i,check,status,margin"));
    assert!(csv.contains("wiener-closed-form"));

    let dir = TempDir::new().unwrap();
    let o = starspec(&[
        "--format",
        "json",
        "--out",
        dir.path().to_str().unwrap(),
        "verify-bounds",
        "--theorem",
        "distance",
        "--m-values",
        "2",
        "--b-values",
        "1",
        "--span",
        "3",
    ]);
    assert_eq!(code(&o), 0);
    let summary = read_json(&dir.path().join("summary.json"));
    assert_eq!(summary["failed"], 0);
    assert!(dir.path().join("bounds.json").exists());
}

#[test]
fn search_is_reproducible() {
    let run = |seed: &str| {
        let dir = TempDir::new().unwrap();
        let args = [
            "--seed",
            seed,
            "--out",
            dir.path().to_str().unwrap(),
            "search",
            "--theorem",
            "adjacency",
            "-n",
            "27",
            "-m",
            "2",
            "-b",
            "1",
            "--trials",
            "40",
        ];
        let o = starspec(&args);
        assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
        let csv = fs::read_to_string(dir.path().join("search.csv")).unwrap();
        let summary = read_json(&dir.path().join("summary.json"));
        (csv, summary)
    };
    let (a, summary) = run("9");
    let (b, _) = run("9");
    let (c, _) = run("10");
    assert_eq!(a, b);
    assert_ne!(a, c);
    assert_eq!(summary["instances"], 41);
    assert!(summary["counterexamples"].as_array().unwrap().is_empty());
    // instance 0 is the extremal graph itself
    assert!(a.lines().nth(1).unwrap().contains("gstar"));
}

#[test]
fn small_oracle_tiny_run() {
    let o = starspec(&[
        "small-oracle",
        "-m",
        "2",
        "--n-max",
        "5",
        "--toughness-samples",
        "20",
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(code(&starspec(&["small-oracle", "--n-max", "12"])), 2);
}
