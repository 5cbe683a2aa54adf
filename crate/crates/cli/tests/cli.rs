//! End-to-end tests of the `natred` binary: exit codes, report fields and
//! byte-for-byte determinism.

use std::path::Path;
use std::process::{Command, Output};

fn natred(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_natred"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write(dir: &Path, name: &str, contents: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path.display().to_string()
}

fn make_family_file(dir: &Path, family: &str, params: &[&str], name: &str) -> String {
    let path = dir.join(name);
    let mut args = vec!["catalog", "make", family];
    for p in params {
        args.push("--param");
        args.push(p);
    }
    args.push("--out");
    let path_str = path.display().to_string();
    args.push(&path_str);
    let out = natred(&args);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    path_str
}

#[test]
fn analyze_generic_member() {
    let dir = tempfile::tempdir().unwrap();
    let file = make_family_file(
        dir.path(),
        "loren2",
        &["c=1", "alpha=1", "beta=0", "delta=2"],
        "loren2.json",
    );
    let out = natred(&["analyze", &file]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["validation"]["valid"], serde_json::json!(true));
    assert_eq!(report["holonomy"]["dim"], serde_json::json!(2));
    assert_eq!(
        report["decomposability"]["verdict"],
        serde_json::json!("indecomposable")
    );
    assert_eq!(report["geometry"]["flat"], serde_json::json!(false));

    // Determinism: identical inputs give identical bytes.
    let again = natred(&["analyze", &file]);
    assert_eq!(out.stdout, again.stdout);

    // validate on the same file exits 0.
    let v = natred(&["validate", &file]);
    assert!(v.status.success());
}

#[test]
fn analyze_batch_is_thread_count_independent() {
    let dir = tempfile::tempdir().unwrap();
    let a = make_family_file(
        dir.path(),
        "loren2",
        &["c=1", "alpha=1", "beta=0", "delta=2"],
        "a.json",
    );
    let b = make_family_file(
        dir.path(),
        "sl_lorentz",
        &["c=1", "eta=1", "alpha=3"],
        "b.json",
    );
    let c = make_family_file(dir.path(), "dosdos1", &["lambda=2"], "c.json");
    let seq = natred(&["analyze", &a, &b, &c, "--jobs", "1"]);
    let par = natred(&["analyze", &a, &b, &c, "--jobs", "3"]);
    assert!(seq.status.success());
    assert_eq!(seq.stdout, par.stdout);
}

#[test]
fn invalid_structure_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let file = make_family_file(dir.path(), "oscillator", &["epsilon=1/2"], "osc.json");
    let out = natred(&["validate", &file]);
    assert_eq!(out.status.code(), Some(1));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["valid"], serde_json::json!(false));

    let out = natred(&["analyze", &file]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn malformed_input_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let garbage = write(dir.path(), "garbage.json", "not json");
    let out = natred(&["validate", &garbage]);
    assert_eq!(out.status.code(), Some(2));

    // Bad pair key: the error names the offending field.
    let bad = write(
        dir.path(),
        "bad.json",
        r#"{"metric":{"gram":[["-1","0","0","0"],["0","1","0","0"],["0","0","1","0"],["0","0","0","1"]]},"torsion":{"4,1":{"1":"1"}}}"#,
    );
    let out = natred(&["validate", &bad]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("torsion"));

    let out = natred(&["catalog", "make", "loren1", "--param", "lambda=0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("lambda"));
}

#[test]
fn classify_op_families() {
    let dir = tempfile::tempdir().unwrap();
    let a1 = write(
        dir.path(),
        "a1.json",
        r#"[["0","0","1","0"],["0","0","1","0"],["1","-1","0","0"],["0","0","0","0"]]"#,
    );
    let out = natred(&["classify-op", "--signature", "lorentz", "--matrix", &a1]);
    assert!(out.status.success());
    let tag: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(tag["family"], serde_json::json!("Lor_a"));
    assert_eq!(tag["nilpotency_index"], serde_json::json!(3));

    // Witt-basis operator with the Witt Gram override.
    let b2 = write(
        dir.path(),
        "b2.json",
        r#"[["1","0","1","0"],["0","-1","0","1"],["0","0","1","0"],["0","0","0","-1"]]"#,
    );
    let witt = write(
        dir.path(),
        "witt.json",
        r#"[["0","0","0","-1"],["0","0","1","0"],["0","1","0","0"],["-1","0","0","0"]]"#,
    );
    let out = natred(&[
        "classify-op",
        "--signature",
        "neutral",
        "--matrix",
        &b2,
        "--gram",
        &witt,
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let tag: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(tag["family"], serde_json::json!("Neu_b2"));
    assert_eq!(tag["parameters"]["lambda"], serde_json::json!("1"));

    // A non-skew matrix is a malformed operator: exit 2.
    let id = write(
        dir.path(),
        "id.json",
        r#"[["1","0","0","0"],["0","1","0","0"],["0","0","1","0"],["0","0","0","1"]]"#,
    );
    let out = natred(&["classify-op", "--signature", "lorentz", "--matrix", &id]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn constraints_solution_space() {
    let dir = tempfile::tempdir().unwrap();
    let a1 = write(
        dir.path(),
        "a1.json",
        r#"[["0","0","1","0"],["0","0","1","0"],["1","-1","0","0"],["0","0","0","0"]]"#,
    );
    let out = natred(&["constraints", "--op", &a1, "--family", "lorentz"]);
    assert!(out.status.success());
    let sol: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(sol["dim"], serde_json::json!(2));
    assert_eq!(
        sol["basis"],
        serde_json::json!([["1", "0", "0", "0"], ["0", "0", "1", "-1"]])
    );
}

#[test]
fn catalog_list_and_split_output() {
    let out = natred(&["catalog", "list"]);
    assert!(out.status.success());
    let list: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(list.as_array().unwrap().len(), 7);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("split.json");
    let path_str = path.display().to_string();
    let out = natred(&[
        "catalog", "make", "loren1", "--param", "lambda=2", "--kind", "split", "--out", &path_str,
    ]);
    assert!(out.status.success());
    let split: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(split["h"], serde_json::json!([5]));
    assert_eq!(split["m"], serde_json::json!([1, 2, 3, 4]));
}
