//! End-to-end runs of the `domcx` binary.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn domcx(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_domcx"))
        .args(args)
        .env_remove("DOMCX_WORKERS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

fn summary(out: &str) -> Value {
    let last = out.lines().last().unwrap();
    serde_json::from_str::<Value>(last).unwrap()["summary"].clone()
}

fn homology_rows(out: &str) -> Vec<Vec<String>> {
    out.lines()
        .skip(1)
        .map(|l| l.split('\t').map(String::from).collect())
        .collect()
}

#[test]
fn invariants_table() {
    let dir = tempfile::tempdir().unwrap();
    // C5, K1, P4
    let input = write(dir.path(), "g.g6", "Dhc\n@\nCh\n");
    let o = domcx(&["invariants", "--input", &input]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let out = stdout(&o);
    let rows: Vec<Vec<&str>> = out.lines().map(|l| l.split('\t').collect()).collect();
    assert_eq!(rows[0], ["id", "n", "m", "alpha", "tau", "gamma"]);
    assert_eq!(rows[1][1..], ["5", "5", "2", "3", "2"]);
    assert_eq!(rows[3][1..], ["4", "3", "2", "2", "2"]);
    assert_eq!(rows[2][1..], ["1", "0", "1", "0", "1"]);
    let o = domcx(&["invariants", "--family", "cycle", "--n", "5"]);
    let out = stdout(&o);
    let row: Vec<&str> = out.lines().nth(1).unwrap().split('\t').collect();
    assert_eq!(row, ["cycle-n5", "5", "5", "2", "3", "2"]);
    let o = domcx(&["invariants", "--family", "path", "--n", "4"]);
    let out = stdout(&o);
    let row: Vec<&str> = out.lines().nth(1).unwrap().split('\t').collect();
    assert_eq!(row[3..5], ["2", "2"]);
}

#[test]
fn invariants_reports_parse_errors_per_line() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "g.g6", "A_\nA\n@\n");
    let o = domcx(&["invariants", "--input", &input]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o).lines().count(), 3);
    assert!(String::from_utf8_lossy(&o.stderr).contains("line2"));
}

#[test]
fn complex_text_examples() {
    let dir = tempfile::tempdir().unwrap();
    let k2 = write(dir.path(), "k2.g6", "A_\n");
    let o = domcx(&["complex", "--input", &k2, "--which", "dominance"]);
    assert_eq!(stdout(&o), "2 2\n0\n1\n");
    let e2 = write(dir.path(), "e2.g6", "A?\n");
    let o = domcx(&["complex", "--input", &e2, "--which", "dominance"]);
    assert_eq!(stdout(&o), "2 1\n\n");
    let k1 = write(dir.path(), "k1.g6", "@\n");
    let o = domcx(&["complex", "--input", &k1, "--which", "bowtie_ind"]);
    assert_eq!(stdout(&o), "2 2\n0\n1\n");
    let edges = write(dir.path(), "k2.txt", "2\n0 1\n");
    let o = domcx(&["complex", "--input", &edges]);
    assert_eq!(stdout(&o), "2 2\n0\n1\n");
}

#[test]
fn homology_examples() {
    let o = domcx(&[
        "homology",
        "--family",
        "cycle",
        "--range",
        "4..6",
        "--which",
        "dominance",
    ]);
    assert!(o.status.success());
    let rows = homology_rows(&stdout(&o));
    assert_eq!(rows[0][1..], ["dominance", "1", "b1=3", "0", "1"]);
    assert_eq!(rows[1][3..], ["b1=1", "0", "1"]);
    assert_eq!(rows[2][3..], ["b2=1", "1", "2"]);
    let o = domcx(&[
        "homology",
        "--family",
        "cycle",
        "--n",
        "5",
        "--which",
        "bowtie_ind",
    ]);
    let rows = homology_rows(&stdout(&o));
    assert_eq!(rows[0][5], "2");
}

#[test]
fn homology_of_complex_and_hypergraph_files() {
    let dir = tempfile::tempdir().unwrap();
    let tri = write(dir.path(), "tri.txt", "3 3\n0 1\n0 2\n1 2\n");
    let o = domcx(&["homology", "--complex", &tri, "--which", "identity"]);
    assert_eq!(homology_rows(&stdout(&o))[0][3], "b1=1");
    let o = domcx(&["homology", "--complex", &tri, "--which", "dual"]);
    assert_eq!(homology_rows(&stdout(&o))[0][3], "b-1=1");
    let o = domcx(&["homology", "--complex", &tri, "--which", "suspension"]);
    assert_eq!(homology_rows(&stdout(&o))[0][3], "b2=1");
    let h = write(dir.path(), "h.txt", "3 2\n0 1\n1 2\n");
    let a = domcx(&["homology", "--hypergraph", &h, "--which", "suspension_dual"]);
    let b = domcx(&["homology", "--hypergraph", &h, "--which", "bipartite_ind"]);
    assert_eq!(
        homology_rows(&stdout(&a))[0][3],
        homology_rows(&stdout(&b))[0][3]
    );
}

#[test]
fn verify_cycles_all_checks() {
    let o = domcx(&[
        "verify",
        "--family",
        "cycles",
        "--range",
        "3..12",
        "--checks",
        "all",
        "--workers",
        "4",
    ]);
    assert!(o.status.success(), "{}", stdout(&o));
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 11);
    let s = summary(&out);
    assert_eq!(s["graphs"], 10);
    assert_eq!(s["failures"], 0);
    let c9: Value = serde_json::from_str(out.lines().nth(6).unwrap()).unwrap();
    assert_eq!(c9["id"], "cycle-n9");
    assert_eq!(c9["checks"]["main"]["values"]["gap"], 1);
    assert_eq!(c9["checks"]["known"]["verdict"], "pass");
}

#[test]
fn verify_all_labeled_five() {
    let o = domcx(&[
        "verify",
        "--family",
        "all-labeled",
        "--n",
        "5",
        "--checks",
        "main",
    ]);
    assert!(o.status.success());
    let s = summary(&stdout(&o));
    assert_eq!(s["graphs"], 1024);
    assert_eq!(s["failures"], 0);
    assert_eq!(s["checks"]["main"]["pass"], 1024);
}

#[test]
fn verify_random_trees() {
    let o = domcx(&[
        "verify",
        "--family",
        "trees",
        "--count",
        "100",
        "--seed",
        "1",
        "--checks",
        "main,known",
    ]);
    assert!(o.status.success());
    let s = summary(&stdout(&o));
    assert_eq!(s["graphs"], 100);
    assert_eq!(s["failures"], 0);
    assert_eq!(s["checks"]["known"]["pass"], 100);
}

#[test]
fn verify_output_is_byte_stable_across_worker_counts() {
    let args = [
        "verify", "--family", "gnp", "--range", "3..7", "--count", "25", "--seed", "9",
    ];
    let a = domcx(&[&args[..], &["--workers", "1"]].concat());
    let b = domcx(&[&args[..], &["--workers", "3"]].concat());
    assert_eq!(a.stdout, b.stdout);
    let c = Command::new(env!("CARGO_BIN_EXE_domcx"))
        .args(args)
        .env("DOMCX_WORKERS", "2")
        .output()
        .unwrap();
    assert_eq!(a.stdout, c.stdout);
    assert!(!stdout(&a).contains("\"ms\""));
    let t = domcx(&[&args[..], &["--timings"]].concat());
    assert!(stdout(&t).contains("\"ms\""));
}

#[test]
fn verify_parse_errors_are_reported_not_fatal() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "g.g6", "Cl\nzz\n");
    let o = domcx(&["verify", "--input", &input, "--checks", "main"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let s = summary(&out);
    assert_eq!(s["graphs"], 1);
    assert_eq!(s["parse_errors"], 1);
    assert!(out.lines().nth(1).unwrap().contains("\"error\""));
}

#[test]
fn cap_refusals() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.jsonl");
    let out_s = out.to_string_lossy().into_owned();
    let o = domcx(&[
        "complex",
        "--family",
        "path",
        "--range",
        "8..10",
        "--which",
        "bowtie_ind",
        "--out",
        &out_s,
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--max-bowtie-n"));
    assert!(!out.exists());
    let o = domcx(&["complex", "--family", "path", "--n", "20", "--out", &out_s]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--max-n"));
    assert!(!out.exists());
    let o = domcx(&[
        "verify",
        "--family",
        "path",
        "--range",
        "8..10",
        "--checks",
        "free_action",
        "--out",
        &out_s,
    ]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let s = summary(&fs::read_to_string(&out).unwrap());
    assert_eq!(s["failures"], 0);
    assert_eq!(s["checks"]["free_action"]["pass"], 2);
    assert_eq!(s["checks"]["free_action"]["refused"], 1);
    let o = domcx(&[
        "verify",
        "--family",
        "path",
        "--range",
        "8..10",
        "--checks",
        "free_action",
        "--max-bowtie-n",
        "10",
    ]);
    assert_eq!(summary(&stdout(&o))["checks"]["free_action"]["pass"], 3);
}

#[test]
fn edge_list_directory_input() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "a.txt", "3\n0 1\n1 2\n");
    write(dir.path(), "b.txt", "4\n0 1\n1 2\n2 3\n3 0\n");
    let o = domcx(&["homology", "--input", &dir.path().to_string_lossy()]);
    let rows = homology_rows(&stdout(&o));
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[0][0], "a.txt");
    assert_eq!(rows[0][3], "b0=1");
    assert_eq!(rows[1][3], "b1=3");
}

#[test]
fn bad_arguments_fail_cleanly() {
    assert_eq!(
        domcx(&["verify", "--family", "cycle", "--n", "5", "--checks", "bogus"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        domcx(&["complex", "--family", "nope", "--n", "5"])
            .status
            .code(),
        Some(2)
    );
    assert!(!domcx(&["homology"]).status.success());
}
