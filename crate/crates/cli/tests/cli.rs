//! End-to-end tests against the compiled `nil` binary.

use std::path::PathBuf;
use std::process::{Command, Output};

fn nil() -> Command {
    Command::new(env!("CARGO_BIN_EXE_nil"))
}

fn run(args: &[&str]) -> Output {
    nil().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn temp_dir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("nil-cli-{tag}-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn invariants_of_a_cycle() {
    let out = run(&["invariants", "cycle:5"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("matching:       2"));
    assert!(text.contains("pd(R/NI(G)):    3"));
    assert!(text.contains("x1*x2*x3"));
}

#[test]
fn invariants_json_schema() {
    let out = run(&["invariants", "complete:4", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["n"], 4);
    assert_eq!(v["ni_generators"], serde_json::json!(["x1*x2*x3*x4"]));
    assert_eq!(v["betti"]["reg"], 3);
    assert_eq!(v["betti"]["pd"], 1);
}

#[test]
fn invariants_csv_is_one_row() {
    let out = run(&["invariants", "path:3", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.trim().lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].starts_with("graph,n,m,matching"));
    assert!(lines[1].contains("x1*x2 x2*x3"));
}

#[test]
fn invariants_reads_edge_list_files() {
    let dir = temp_dir("edges");
    let file = dir.join("p3.txt");
    std::fs::write(&file, "# path\n3 2\n1 2\n2 3\n").unwrap();
    let out = run(&["invariants", file.to_str().unwrap(), "--format", "csv"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("3,2,1"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn malformed_edge_list_names_the_line() {
    let dir = temp_dir("badline");
    let file = dir.join("bad.txt");
    std::fs::write(&file, "3 2\n1 2\n1 9\n").unwrap();
    let out = run(&["invariants", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 3"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn betti_star_edge_equals_ni() {
    let via_edge = run(&["betti", "star:5", "--ideal", "edge", "--format", "json"]);
    let via_ni = run(&["betti", "star:5", "--ideal", "ni", "--format", "json"]);
    assert!(via_edge.status.success() && via_ni.status.success());
    let a: serde_json::Value = serde_json::from_str(&stdout(&via_edge)).unwrap();
    let b: serde_json::Value = serde_json::from_str(&stdout(&via_ni)).unwrap();
    assert_eq!(a, b);
}

#[test]
fn betti_path3_of_cycle_equals_ni() {
    let via_path = run(&["betti", "cycle:6", "--ideal", "path:3", "--format", "json", "--oracle"]);
    let via_ni = run(&["betti", "cycle:6", "--ideal", "ni", "--format", "json", "--oracle"]);
    assert!(via_path.status.success() && via_ni.status.success());
    assert_eq!(stdout(&via_path), stdout(&via_ni));
}

#[test]
fn betti_csv_lists_entries() {
    let out = run(&["betti", "path:3", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.trim(), "i,j,count\n0,0,1\n1,2,2\n2,3,1");
}

#[test]
fn betti_respects_p_flag_and_env() {
    let flagged = run(&["betti", "cycle:5", "--p", "32003", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&flagged)).unwrap();
    assert_eq!(v["p"], 32003);
    let env = nil()
        .args(["betti", "cycle:5", "--format", "json"])
        .env("NIL_DEFAULT_P", "3")
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_str(&stdout(&env)).unwrap();
    assert_eq!(v["p"], 3);
}

#[test]
fn verify_writes_reports_and_exit_codes() {
    let dir = temp_dir("verify");
    let report_path = dir.join("forest.json");
    let out = run(&[
        "verify",
        "forest-equality",
        "--n",
        "5",
        "--out",
        report_path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&report_path).unwrap()).unwrap();
    assert_eq!(report["suite"], "forest-equality");
    assert_eq!(report["failures"], serde_json::json!([]));
    assert_eq!(report["seed"], 2026);
    assert!(stderr(&out).contains("PASS"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn verify_unknown_suite_is_usage_error() {
    let out = run(&["verify", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("forest-equality"));
    assert!(stderr(&out).contains("closed-forms"));
}

#[test]
fn gen_family_round_trips_through_invariants() {
    let out = run(&["gen", "family", "wheel:8"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("8 14\n"));
    let dir = temp_dir("gen");
    let file = dir.join("wheel.txt");
    std::fs::write(&file, &text).unwrap();
    let back = run(&["invariants", file.to_str().unwrap(), "--format", "csv"]);
    assert!(back.status.success());
    assert!(stdout(&back).contains("8,14"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn gen_counts() {
    let trees = run(&["gen", "trees", "--n", "4", "--count"]);
    assert_eq!(stdout(&trees).trim(), "16");
    let classes = run(&["gen", "trees", "--n", "4", "--dedup", "--count"]);
    assert_eq!(stdout(&classes).trim(), "2");
    let graphs = run(&["gen", "graphs", "--n", "3", "--count"]);
    assert_eq!(stdout(&graphs).trim(), "8");
    let connected = run(&["gen", "graphs", "--n", "3", "--connected", "--count"]);
    assert_eq!(stdout(&connected).trim(), "4");
    let unicyclic = run(&["gen", "unicyclic", "--n", "5", "--count"]);
    assert_eq!(stdout(&unicyclic).trim(), "5");
}

#[test]
fn census_reports_strictness_counts() {
    let out = run(&["census", "--n", "4"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["rows"].as_array().unwrap().len(), 18);
    assert!(v["reg_strict_count"].as_u64().unwrap() >= 2);
    assert!(stderr(&out).contains("classes"));
}

#[test]
fn cache_hits_and_audit() {
    let dir = temp_dir("cache");
    let cache_dir = dir.join("cache");
    let args = ["betti", "cycle:6", "--cache-dir", cache_dir.to_str().unwrap()];
    let first = run(&args);
    assert!(first.status.success());
    assert!(!stdout(&first).contains("(cached)"));
    let second = run(&args);
    assert!(second.status.success());
    assert!(stdout(&second).contains("(cached)"));

    // isomorphic relabeling shares the cache entry
    let file = dir.join("c6.txt");
    std::fs::write(&file, "6 6\n1 3\n3 5\n5 2\n2 4\n4 6\n6 1\n").unwrap();
    let relabeled = run(&[
        "betti",
        file.to_str().unwrap(),
        "--cache-dir",
        cache_dir.to_str().unwrap(),
    ]);
    assert!(relabeled.status.success());
    assert!(stdout(&relabeled).contains("(cached)"));

    let audit = run(&[
        "betti",
        "cycle:6",
        "--cache-dir",
        cache_dir.to_str().unwrap(),
        "--cache",
        "audit",
    ]);
    assert!(audit.status.success(), "{}", stderr(&audit));
    assert!(stderr(&audit).contains("cache audit clean"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn jobs_flag_is_accepted_and_deterministic() {
    let one = run(&["--jobs", "1", "betti", "wheel:7", "--format", "json"]);
    let four = run(&["--jobs", "4", "betti", "wheel:7", "--format", "json"]);
    assert!(one.status.success() && four.status.success());
    assert_eq!(stdout(&one), stdout(&four));
}
