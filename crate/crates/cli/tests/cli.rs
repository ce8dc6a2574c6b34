use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sumgraph")).args(args).output().expect("spawn sumgraph")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(out)))
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn construct_gdm(dir: &TempDir) -> String {
    let file = dir.path().join("g.el");
    let out = run(&["construct", "--family", "gdm", "--d", "3", "--m", "4", "--out", path_str(&file)]);
    assert_eq!(code(&out), 0, "{out:?}");
    path_str(&file).to_string()
}

#[test]
fn construct_writes_the_edge_list() {
    let dir = TempDir::new().unwrap();
    let file = construct_gdm(&dir);
    let text = std::fs::read_to_string(&file).unwrap();
    assert_eq!(text.lines().next(), Some("16 24"));
    assert_eq!(text.lines().count(), 25);
}

#[test]
fn check_on_constructed_graph_holds() {
    let dir = TempDir::new().unwrap();
    let file = construct_gdm(&dir);
    let out = run(&["check", "--in", &file, "--thm15", "--prop16"]);
    assert_eq!(code(&out), 0);
    let verdicts = json(&out);
    let verdicts = verdicts.as_array().unwrap();
    assert_eq!(verdicts.len(), 2);
    assert!(verdicts.iter().all(|v| v["holds"] == true));
    for key in ["name", "lhs", "rhs", "branch", "holds", "details"] {
        assert!(verdicts[0].get(key).is_some(), "missing {key}");
    }
}

#[test]
fn power_header() {
    let dir = TempDir::new().unwrap();
    let file = construct_gdm(&dir);
    let out = run(&["power", "--in", &file, "--h", "2"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).lines().next(), Some("16 44"));
}

#[test]
fn power_profile_json() {
    let dir = TempDir::new().unwrap();
    let file = construct_gdm(&dir);
    let powered = dir.path().join("p.el");
    let out = run(&["power", "--in", &file, "--h", "3", "--out", path_str(&powered), "--profile", "3"]);
    assert_eq!(code(&out), 0);
    let profile = json(&out);
    assert_eq!(profile["n"], 16);
    assert_eq!(profile["base_edges"], 24);
    let rows: Vec<(u64, u64)> = profile["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| (r["total"].as_u64().unwrap(), r["excess"].as_u64().unwrap()))
        .collect();
    assert_eq!(rows, [(24, 0), (44, 20), (68, 44)]);
    let text = std::fs::read_to_string(&powered).unwrap();
    assert_eq!(text.lines().next(), Some("16 68"));
}

#[test]
fn epsilon_bracket_prints_to_four_digits() {
    let out = run(&["epsilon", "--tol", "1e-12"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    for key in ["lo", "hi"] {
        assert_eq!(format!("{:.4}", v[key].as_f64().unwrap()), "0.0874");
        assert!(v[key].as_f64().unwrap().to_string().starts_with("0.0873"));
    }
    assert_eq!(code(&run(&["epsilon", "--tol", "0.5"])), 2);
}

#[test]
fn failing_check_exits_one_with_full_verdict() {
    let dir = TempDir::new().unwrap();
    let file = dir.path().join("c8.el");
    assert_eq!(code(&run(&["construct", "--family", "cycle", "--n", "8", "--out", path_str(&file)])), 0);
    let out = run(&["check", "--in", path_str(&file), "--thm15", "--eps", "2.5"]);
    assert_eq!(code(&out), 1);
    let v = json(&out);
    assert_eq!(v[0]["holds"], false);
    assert_eq!(v[0]["lhs"], 24);
    assert_eq!(v[0]["rhs"], 28);
    // The same graph passes at eps = 2, the arithmetic-progression cap.
    assert_eq!(code(&run(&["check", "--in", path_str(&file), "--thm15", "--eps", "2"])), 0);
}

#[test]
fn non_regular_input_is_not_applicable() {
    let dir = TempDir::new().unwrap();
    let file = dir.path().join("star.el");
    std::fs::write(&file, "4 3\n0 1\n0 2\n0 3\n").unwrap();
    let out = run(&["check", "--in", path_str(&file)]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v[0]["status"], "not-applicable");
    assert_eq!(v[1]["name"], "prop16-diameter");
    assert_eq!(v[1]["holds"], true);
    assert_eq!(v[2]["status"], "not-applicable");
}

#[test]
fn malformed_input_never_exits_zero() {
    let dir = TempDir::new().unwrap();
    let cases = [
        ("empty", ""),
        ("header", "x y\n"),
        ("count", "3 2\n0 1\n"),
        ("unsorted", "3 2\n1 2\n0 1\n"),
        ("loop", "3 1\n1 1\n"),
        ("range", "3 1\n0 5\n"),
        ("duplicate", "3 2\n0 1\n0 1\n"),
        ("disconnected", "4 2\n0 1\n2 3\n"),
    ];
    for (name, text) in cases {
        let file = dir.path().join(name);
        std::fs::write(&file, text).unwrap();
        for sub in [&["check", "--in"][..], &["diagnose", "--in"], &["power", "--h", "2", "--in"]] {
            let mut args = sub.to_vec();
            args.push(path_str(&file));
            let out = run(&args);
            if name == "disconnected" && sub[0] == "power" {
                // Powers of disconnected graphs are well defined.
                assert_eq!(code(&out), 0);
            } else {
                assert_eq!(code(&out), 2, "{name} {sub:?}: {out:?}");
            }
        }
    }
    assert_eq!(code(&run(&["check", "--in", "/nonexistent/file.el"])), 2);
}

#[test]
fn usage_errors_exit_two() {
    let cases: &[&[&str]] = &[
        &[],
        &["bogus"],
        &["construct", "--family", "gdm", "--d", "3"],
        &["construct", "--family", "nope", "--n", "5"],
        &["construct", "--family", "gdm", "--d", "1", "--m", "3"],
        &["construct", "--family", "diam-extremal", "--d", "6", "--k", "1"],
        &["construct", "--family", "circulant", "--n", "7", "--gens", "0,1"],
        &["search", "--n", "5", "--d", "3", "--exhaustive", "--objective", "min-3ratio"],
        &["search", "--n", "13", "--d", "4", "--exhaustive", "--dedup", "--objective", "min-3ratio"],
        &["search", "--n", "8", "--d", "3", "--exhaustive", "--objective", "min-3ratio", "--jobs", "0"],
        &["search", "--n", "8", "--d", "3", "--random", "4", "--objective", "min-3ratio"],
        &["check-cd", "--p", "8", "--set", "0,1", "--hmax", "2"],
        &["check-thm14", "--p", "7", "--set", "0,1", "--hmax", "2"],
        &["check-thm14", "--p", "7", "--set", "1,6", "--hmax", "2"],
        &["power", "--in", "-"],
    ];
    for args in cases {
        assert_eq!(code(&run(args)), 2, "{args:?}");
    }
    assert_eq!(code(&run(&["--help"])), 0);
}

#[test]
fn set_checks_hold() {
    for sub in ["check-cd", "check-thm14"] {
        let out = run(&[sub, "--p", "13", "--set", "0,1,12,5,8", "--hmax", "4"]);
        assert_eq!(code(&out), 0);
        let v = json(&out);
        assert_eq!(v.as_array().unwrap().len(), 4);
        assert!(v.as_array().unwrap().iter().all(|x| x["holds"] == true));
    }
    // check-cd accepts asymmetric sets.
    assert_eq!(code(&run(&["check-cd", "--p", "7", "--set", "2,3", "--hmax", "3"])), 0);
}

#[test]
fn circulant_closure_is_reported() {
    let out = run(&["construct", "--family", "circulant", "--n", "11", "--gens", "1,3"]);
    assert_eq!(code(&out), 0);
    assert!(String::from_utf8_lossy(&out.stderr).contains("{1,3,8,10}"));
    assert_eq!(stdout(&out).lines().next(), Some("11 22"));
    let quiet = run(&["construct", "--family", "circulant", "--n", "11", "--gens", "1,10"]);
    assert!(quiet.stderr.is_empty());
}

#[test]
fn every_family_round_trips() {
    let dir = TempDir::new().unwrap();
    let families: &[&[&str]] = &[
        &["--family", "gdm", "--d", "4", "--m", "3"],
        &["--family", "diam-extremal", "--d", "5", "--k", "2"],
        &["--family", "circulant", "--n", "9", "--gens", "1,2"],
        &["--family", "clique-path", "--n", "40"],
        &["--family", "cycle", "--n", "6"],
        &["--family", "complete", "--n", "5"],
        &["--family", "path", "--n", "7"],
    ];
    for (i, fam) in families.iter().enumerate() {
        let first = dir.path().join(format!("{i}.el"));
        let second = dir.path().join(format!("{i}-again.el"));
        let mut args = vec!["construct"];
        args.extend_from_slice(fam);
        args.extend(["--out", path_str(&first)]);
        assert_eq!(code(&run(&args)), 0, "{fam:?}");
        // power --h 1 reads the file and writes it back unchanged.
        let out = run(&["power", "--in", path_str(&first), "--h", "1", "--out", path_str(&second)]);
        assert_eq!(code(&out), 0);
        assert_eq!(std::fs::read(&first).unwrap(), std::fs::read(&second).unwrap());
    }
}

#[test]
fn diagnose_outputs() {
    let dir = TempDir::new().unwrap();
    let file = dir.path().join("c8.el");
    assert_eq!(code(&run(&["construct", "--family", "cycle", "--n", "8", "--out", path_str(&file)])), 0);
    let out = run(&["diagnose", "--in", path_str(&file), "--vertex", "0", "--cut"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    let dec = &v["decompositions"][0];
    assert_eq!(dec["a"], serde_json::json!([1, 7]));
    assert_eq!(dec["case_tag"], "case1");
    assert!((dec["alpha"].as_f64().unwrap() - 0.3522).abs() < 1e-3);
    assert_eq!(v["cut"]["path"].as_array().unwrap().len(), 5);
    let all = json(&run(&["diagnose", "--in", path_str(&file)]));
    assert_eq!(all["decompositions"].as_array().unwrap().len(), 8);
    assert!(all.get("cut").is_none());
    assert_eq!(code(&run(&["diagnose", "--in", path_str(&file), "--vertex", "8"])), 2);
}

#[test]
fn search_is_deterministic_across_jobs() {
    let base = ["search", "--n", "10", "--d", "3", "--exhaustive", "--dedup", "--objective", "min-2excess"];
    let one = run(&[&base[..], &["--jobs", "1"]].concat());
    let four = run(&[&base[..], &["--jobs", "4"]].concat());
    assert_eq!(code(&one), 0);
    assert_eq!(one.stdout, four.stdout);
    let lines: Vec<Value> = stdout(&one).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert!(!lines.is_empty());
    assert_eq!(lines[0]["objective"], "1");
    assert!(lines.iter().all(|r| 2 * r["excess2"].as_u64().unwrap() >= 10));

    let random = ["search", "--n", "20", "--d", "3", "--random", "30", "--seed", "9", "--objective", "min-3ratio"];
    let a = run(&[&random[..], &["--jobs", "1", "--format", "csv"]].concat());
    let b = run(&[&random[..], &["--jobs", "3", "--format", "csv"]].concat());
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(stdout(&a).lines().next(), Some("n,d,edges,excess2,total3,diameter,objective"));
}

#[test]
fn search_includes_gdm_in_the_twelve_vertex_scan() {
    let out = run(&["search", "--n", "12", "--d", "3", "--exhaustive", "--dedup", "--objective", "min-2excess", "--top", "3"]);
    assert_eq!(code(&out), 0);
    let first: Value = serde_json::from_str(stdout(&out).lines().next().unwrap()).unwrap();
    assert_eq!(first["excess2"], 15);
    assert_eq!(first["objective"], "5/4");
    assert_eq!(stdout(&out).lines().count(), 3);
}

#[test]
fn stdin_input() {
    use std::io::Write;
    let mut child = Command::new(env!("CARGO_BIN_EXE_sumgraph"))
        .args(["power", "--in", "-", "--h", "2"])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"4 3\n0 1\n1 2\n2 3\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "4 5\n0 1\n0 2\n1 2\n1 3\n2 3\n");
}
