use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

fn tanglekit(args: &[&str], envs: &[(&str, &str)]) -> (i32, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_tanglekit"));
    cmd.args(args).env_remove("TANGLEKIT_CAP");
    for (k, v) in envs {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap())
}

fn json(args: &[&str]) -> (i32, Value) {
    let (code, out) = tanglekit(args, &[]);
    (code, serde_json::from_str(&out).expect("stdout is JSON"))
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("tanglekit-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn corrupted_record_is_named() {
    let corpus = "name: unknot\nO 1\n\nname: 3_1\nX 1 4 2 5\nX 3 6 4 1\nX 5 2 6 7\n";
    let path = temp_file("corrupt.pd", corpus);
    let (code, v) = json(&["corpus", "verify", "--corpus", path.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["kind"], "malformed-diagram");
    assert!(v["error"]["message"].as_str().unwrap().contains("3_1"), "{v}");
}

#[test]
fn missing_corpus_file() {
    let (code, v) = json(&["corpus", "verify", "--corpus", "/nonexistent/corpus.pd"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["kind"], "corpus");
}

#[test]
fn only_filter_selects_family() {
    let (code, v) = json(&["corpus", "verify", "--only", "kei", "--instances", "20"]);
    assert_eq!(code, 0, "{v}");
    let names: Vec<&str> = v["assertions"]
        .as_array()
        .unwrap()
        .iter()
        .map(|a| a["name"].as_str().unwrap())
        .collect();
    let ids: Vec<&str> = names.iter().map(|n| n.split(' ').next().unwrap()).collect();
    assert_eq!(ids, ["3", "4", "5", "8d"]);
}

#[test]
fn reports_are_reproducible() {
    let args = [
        "corpus",
        "verify",
        "--only",
        "jones,tangle",
        "--instances",
        "30",
        "--seed",
        "7",
    ];
    let (c1, a) = tanglekit(&args, &[]);
    let (c2, b) = tanglekit(&args, &[]);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(a, b);
}

#[test]
fn invariants_of_9_49() {
    let (code, v) = json(&["invariants", "9_49"]);
    assert_eq!(code, 0);
    let r = &v["results"];
    assert_eq!(r["components"], 1);
    assert!(r["col5"].as_array().unwrap().len() > 1);
    assert_eq!(r["bq5"]["size"], 25);
    assert!(r["jones5"]["verdict"].is_string());
}

#[test]
fn invariants_of_unlinks() {
    let (_, v) = json(&["invariants", "unknot"]);
    assert_eq!(v["results"]["col5"], serde_json::json!([5]));
    assert_eq!(v["results"]["bq5"]["size"], 1);
    assert_eq!(v["results"]["jones5"]["is_zero"], false);
    let u2 = temp_file("u2.pd", "O 2\n");
    let u3 = temp_file("u3.pd", "O 3\n");
    let (_, a) = json(&["invariants", u2.to_str().unwrap()]);
    let (_, b) = json(&["invariants", u3.to_str().unwrap()]);
    assert_eq!(a["results"]["col5"], serde_json::json!([5, 5]));
    assert_eq!(b["results"]["col5"], serde_json::json!([5, 5, 5]));
}

#[test]
fn cap_from_environment() {
    let (code, out) = tanglekit(&["kei", "burnside", "9_40", "--n", "5"], &[("TANGLEKIT_CAP", "10")]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["results"]["completed"], false);
    assert_eq!(v["results"]["cap"], 10);
}

#[test]
fn failed_assertion_sets_exit_code() {
    // 0*1 = 0 but (0*1)*1 must return 0; row 0 breaks the second axiom
    let bad = temp_file("bad.kei", "2\n0 1\n1 1\n");
    let (code, v) = json(&["kei", "check", bad.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert_eq!(v["passed"], false);
    let good = temp_file("r3.kei", "3\n0 2 1\n2 1 0\n1 0 2\n");
    assert_eq!(json(&["kei", "check", good.to_str().unwrap()]).0, 0);
}

#[test]
fn text_is_a_rendering_of_the_json() {
    let (_, v) = json(&["color", "3_1", "--n", "3"]);
    let (_, text) = tanglekit(&["--text", "color", "3_1", "--n", "3"], &[]);
    assert!(text.contains(&format!("schema_version: {}", v["schema_version"])));
    assert!(text.contains("  group: [3, 3]"));
    assert!(text.contains("  order: 9"));
}

#[test]
fn braid_commands() {
    let (code, v) = json(&["braid", "verify-prop27"]);
    assert_eq!(code, 0);
    assert!(v["assertions"].as_array().unwrap().len() > 10);
    let (_, v) = json(&["braid", "image", "1 1 1 1 1"]);
    assert_eq!(v["results"]["quotient_element"], 0);
    assert_eq!(json(&["braid", "image", "1 3"]).0, 2);
}

#[test]
fn tangle_commands() {
    let (_, v) = json(&["tangle", "closure", "(tw 2 2)", "--kind", "num"]);
    assert_eq!(v["results"]["fraction"]["fraction"], "5/2");
    let (code, v) = json(&["tangle", "move", "(comp 0 0 t0 x+)", "--site", "R"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["kind"], "invalid-move-site");
    let (_, v) = json(&[
        "tangle",
        "obstruct",
        "(comp 0 0 (tw 2 2) (comp 0 0 tinf tinf))",
        "unknot",
    ]);
    assert_eq!(v["results"]["verdict"], "obstructed");
}
