use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::{json, Value};

fn breakdiv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_breakdiv"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn data(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "data", name].iter().collect();
    path.display().to_string()
}

/// Runs a command that must succeed and returns its JSON report.
fn report(args: &[&str]) -> Value {
    let out = breakdiv(args);
    assert!(
        out.status.success(),
        "{args:?} exited with {:?}: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn rows<'a>(report: &'a Value, table: &str) -> &'a Vec<Value> {
    report["tables"]
        .as_array()
        .unwrap()
        .iter()
        .find(|t| t["name"] == table)
        .unwrap_or_else(|| panic!("no table {table}"))["rows"]
        .as_array()
        .unwrap()
}

fn count_value(report: &Value, quantity: &str, method: &str) -> Value {
    rows(report, "counts")
        .iter()
        .find(|r| r["quantity"] == quantity && r["method"] == method)
        .unwrap_or_else(|| panic!("no row {quantity}/{method}"))["value"]
        .clone()
}

fn temp_graph(contents: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

#[test]
fn enumerate_break_2_3() {
    let r = report(&["enumerate", "--set", "break", "--m", "2", "--n", "3"]);
    let divisors: Vec<&Value> = rows(&r, "break").iter().map(|row| &row["divisor"]).collect();
    assert_eq!(divisors.len(), 12);
    assert!(divisors.contains(&&json!([3, 1, 0])));
    let as_vecs: Vec<Vec<i64>> = divisors.iter().map(|d| serde_json::from_value((*d).clone()).unwrap()).collect();
    let mut sorted = as_vecs.clone();
    sorted.sort();
    assert_eq!(as_vecs, sorted);
}

#[test]
fn enumerate_park_2_3() {
    let r = report(&["enumerate", "--set", "park", "--m", "2", "--n", "3"]);
    assert_eq!(rows(&r, "park").len(), 12);
}

#[test]
fn enumerate_residues_and_classes_2_3() {
    let r = report(&["enumerate", "--set", "residue", "--m", "2", "--n", "3"]);
    assert_eq!(rows(&r, "residue").len(), 36);
    let r = report(&["enumerate", "--set", "classes", "--m", "2", "--n", "3"]);
    let classes = rows(&r, "classes");
    assert_eq!(classes.len(), 12);
    let row = classes.iter().find(|c| c["class_key"] == json!([0, 0, 4])).unwrap();
    assert_eq!(row["members"], json!([[0, 0, 4], [2, 2, 0], [4, 4, 2]]));
    assert_eq!(row["break_representative"], json!([2, 2, 0]));
}

#[test]
fn enumerate_tree_from_file() {
    let r = report(&["enumerate", "--set", "break", "--graph", &data("tree4.txt")]);
    assert_eq!(rows(&r, "break"), &vec![json!({"divisor": [0, 0, 0, 0]})]);
}

#[test]
fn graph_file_counts_match_matrix_tree() {
    let r = report(&["count", "--graph", &data("triangle.txt")]);
    // K_3 with one doubled edge has 2 + 2 + 1 = 5 spanning trees
    assert_eq!(count_value(&r, "spanning_trees", "matrix-tree"), 5);
    assert_eq!(count_value(&r, "breaks", "enumeration"), 5);
    assert_eq!(count_value(&r, "parks", "enumeration"), 5);
}

#[test]
fn count_examples() {
    let r = report(&["count", "--m", "2", "--n", "3"]);
    assert_eq!(count_value(&r, "breaks", "formula"), 12);
    assert_eq!(count_value(&r, "breaks", "enumeration"), 12);
    assert_eq!(count_value(&r, "orbits_D", "formula"), 9);
    assert_eq!(count_value(&r, "orbits_D", "enumeration"), 9);
    assert_eq!(count_value(&r, "dt", "formula"), 3);
    assert_eq!(count_value(&r, "dt", "enumeration"), 3);

    let r = report(&["count", "--m", "2", "--n", "4"]);
    assert_eq!(count_value(&r, "dt", "formula"), 10);
    assert_eq!(count_value(&r, "dt", "enumeration"), 10);

    for m in ["1", "2", "5"] {
        let r = report(&["count", "--m", m, "--n", "1"]);
        assert_eq!(count_value(&r, "breaks", "formula"), 1);
        assert_eq!(count_value(&r, "breaks", "enumeration"), 1);
    }
}

#[test]
fn character_2_3() {
    let r = report(&["character", "--m", "2", "--n", "3"]);
    let frob = rows(&r, "frobenius");
    let s_row = frob.iter().find(|f| f["module"] == "Break" && f["basis"] == "s").unwrap();
    assert_eq!(s_row["expansion"], "3 s3 + 4 s21 + 1 s111");
    let verdicts = rows(&r, "verdicts");
    assert!(verdicts.iter().any(|v| v["verdict"] == "Res = Park: PASS"));
    let cycle = rows(&r, "break_character").iter().find(|c| c["class"] == json!([3])).unwrap();
    assert_eq!((&cycle["closed"], &cycle["bruteforce"]), (&json!(0), &json!(0)));
}

#[test]
fn character_pretty_output_contains_the_verdict() {
    let out = breakdiv(&["character", "--m", "2", "--n", "3", "--format", "pretty"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("3 s3 + 4 s21 + 1 s111"));
    assert!(text.contains("Res = Park: PASS"));
}

fn dt_row(m: &str, n_max: &str, n: u64) -> Value {
    let r = report(&["dt", "--m", m, "--n-max", n_max]);
    rows(&r, "dt").iter().find(|row| row["n"] == n).unwrap().clone()
}

#[test]
fn dt_examples() {
    assert_eq!(dt_row("2", "4", 4), json!({"n": 4, "closed": 10, "euler_product": 10, "verdict": "AGREE"}));
    assert_eq!(dt_row("1", "1", 1), json!({"n": 1, "closed": 1, "euler_product": 1, "verdict": "AGREE"}));
    assert_eq!(dt_row("2", "3", 3), json!({"n": 3, "closed": 3, "euler_product": 3, "verdict": "AGREE"}));
}

#[test]
fn verify_default_ranges_pass() {
    let r = report(&["verify"]);
    let checks = rows(&r, "verify");
    assert!(checks.len() >= 15);
    for c in checks {
        assert_eq!(c["status"], "PASS", "{c}");
    }
}

#[test]
fn verify_shift_classes_3_5() {
    let r = report(&["verify", "--only", "shift-classes", "--m", "3", "--n", "5"]);
    let checks = rows(&r, "verify");
    assert_eq!(checks.len(), 1);
    assert_eq!(checks[0]["invariant"], "shift-classes");
    assert_eq!(checks[0]["status"], "PASS");
}

#[test]
fn injected_fault_is_reported_by_name() {
    let out = breakdiv(&[
        "verify",
        "--only",
        "restriction,characters",
        "--m",
        "2",
        "--n",
        "4",
        "--inject-fault",
        "restriction",
    ]);
    assert_eq!(out.status.code(), Some(4));
    let r: Value = serde_json::from_slice(&out.stdout).unwrap();
    let checks = rows(&r, "verify");
    let status = |name: &str| checks.iter().find(|c| c["invariant"] == name).unwrap()["status"].clone();
    assert_eq!(status("restriction"), "FAIL");
    assert_eq!(status("characters"), "PASS");
}

#[test]
fn verify_budget_exhaustion_exits_3() {
    let out = breakdiv(&["verify", "--only", "cardinalities", "--budget", "10"]);
    assert_eq!(out.status.code(), Some(3));
    let r: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(rows(&r, "verify")[0]["status"], "BUDGET");
}

#[test]
fn malformed_graph_files_exit_2_without_output() {
    for contents in ["3\n1 1 1\n", "3\n1 2 1\n2 1 2\n", "3\n1 2 1\n1 2 1\n", "3\n1 5 1\n", "two\n", ""] {
        let f = temp_graph(contents);
        let path = f.path().display().to_string();
        for cmd in ["enumerate", "count"] {
            let out = breakdiv(&[cmd, "--graph", &path]);
            assert_eq!(out.status.code(), Some(2), "{contents:?}");
            assert!(out.stdout.is_empty(), "{contents:?}");
            assert!(!out.stderr.is_empty());
        }
    }
    let out = breakdiv(&["enumerate", "--graph", "/nonexistent/graph.txt"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn usage_and_budget_exit_codes() {
    let cases: &[(&[&str], i32)] = &[
        (&["enumerate", "--m", "0", "--n", "3"], 2),
        (&["enumerate", "--m", "2"], 2),
        (&["enumerate", "--m", "2", "--n", "3", "--set", "nope"], 2),
        (&["dt", "--m", "2"], 2),
        (&["verify", "--only", "no-such-check"], 2),
        (&["enumerate", "--m", "3", "--n", "8", "--budget", "1000"], 3),
        (&["dt", "--m", "2", "--n-max", "30"], 3),
        (&["enumerate", "--m", "2", "--n", "4", "--set", "residue", "--budget", "100"], 3),
    ];
    for (args, code) in cases {
        let out = breakdiv(args);
        assert_eq!(out.status.code(), Some(*code), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
    }
    // a larger series budget lifts the cap
    let out = breakdiv(&["dt", "--m", "2", "--n-max", "30", "--max-order", "30"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn output_is_byte_stable() {
    let args = ["verify", "--only", "equivariance,random-graphs,orientation-oracle", "--m", "2", "--n", "4", "--seed", "11"];
    let first = breakdiv(&args);
    assert!(first.status.success());
    assert_eq!(breakdiv(&args).stdout, first.stdout);
    let mut threaded = args.to_vec();
    threaded.extend(["--threads", "4"]);
    assert_eq!(breakdiv(&threaded).stdout, first.stdout);

    for format in ["json", "csv", "pretty"] {
        let a = breakdiv(&["enumerate", "--set", "classes", "--m", "2", "--n", "4", "--format", format]);
        let b = breakdiv(&["enumerate", "--set", "classes", "--m", "2", "--n", "4", "--format", format]);
        assert_eq!(a.stdout, b.stdout);
    }
}

#[test]
fn csv_and_pretty_project_the_json_records() {
    let json = report(&["enumerate", "--set", "park", "--m", "2", "--n", "3"]);
    let records = rows(&json, "park");
    let csv = String::from_utf8(breakdiv(&["enumerate", "--set", "park", "--m", "2", "--n", "3", "--format", "csv"]).stdout).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("# park"));
    assert_eq!(lines.next(), Some("parking_function,orbit_key"));
    let body: Vec<&str> = lines.collect();
    assert_eq!(body.len(), records.len());
    let first = &records[0]["parking_function"];
    let expected = format!(
        "\"({})\"",
        first.as_array().unwrap().iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
    );
    assert!(body[0].starts_with(&expected), "{} vs {expected}", body[0]);

    let pretty = String::from_utf8(breakdiv(&["enumerate", "--set", "park", "--m", "2", "--n", "3", "--format", "pretty"]).stdout).unwrap();
    assert!(pretty.starts_with("park (12 rows)\n"));
    assert_eq!(pretty.lines().count(), 3 + records.len());
}
