use std::process::{Command, Output};

use clan_schubert::{enumerate_clans, Guards};
use serde_json::Value;

const BIN: &str = env!("CARGO_BIN_EXE_clan-schubert");

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn product_with_verify_matches() {
    let report = json(&["product", "--x", "31425", "--y", "14253", "--p", "3", "--verify"]);
    assert_eq!(report["command"], "product");
    assert_eq!(report["output"]["terms"].as_array().unwrap().len(), 8);
    assert_eq!(report["verdict"]["status"], "match");
}

#[test]
fn verdict_only_with_verify_flag() {
    let report = json(&["product", "--x", "31425", "--y", "14253", "--p", "3"]);
    assert!(report.get("verdict").is_none());
}

#[test]
fn identity_product() {
    let report = json(&["product", "--x", "12345", "--y", "12345", "--p", "3"]);
    assert_eq!(
        report["output"]["terms"],
        serde_json::json!([{ "w": "12345", "coeff": 1 }])
    );
}

#[test]
fn product_rejects_wrong_split() {
    let out = run(&["product", "--x", "31425", "--y", "14253", "--p", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("not a descending shuffle at p = 2"), "{err}");
}

#[test]
fn bad_permutation_text_fails() {
    let out = run(&["product", "--x", "3142", "--y", "1425x", "--p", "2"]);
    assert!(!out.status.success());
}

#[test]
fn clan_of_examples() {
    let out = run(&["--format", "text", "clan-of", "--u", "365421", "--v", "142356", "--p", "3"]);
    assert_eq!(stdout(&out), "(+,-,1,2,2,1)\n");
    let report = json(&["clan-of", "--u", "21", "--v", "12", "--p", "1"]);
    assert_eq!(report["output"]["clan"], "(1,1)");
}

#[test]
fn clan_of_incomparable_pair_explains() {
    let out = run(&["clan-of", "--u", "12", "--v", "21", "--p", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("not Bruhat-above") && err.contains("position 1"), "{err}");
}

#[test]
fn pair_of_inverts_clan_of() {
    let report = json(&["pair-of", "--clan", "(+,-,1,2,2,1)"]);
    assert_eq!(report["output"]["u"], "365421");
    assert_eq!(report["output"]["v"], "142356");
    assert_eq!(report["output"]["p"], 3);
    let out = run(&["pair-of", "--clan", "1212"]);
    assert!(!out.status.success());
}

#[test]
fn graph_dot_for_one_one() {
    let out = run(&["--format", "dot", "graph", "--p", "1", "--q", "1"]);
    let dot = stdout(&out);
    assert_eq!(dot.matches("[label=\"(").count(), 3);
    assert_eq!(dot.matches("->").count(), 2);
}

#[test]
fn graph_json_node_count() {
    let report = json(&["graph", "--p", "3", "--q", "2"]);
    let expected = enumerate_clans(3, 2, &Guards::default()).unwrap().len();
    assert_eq!(report["output"]["graph"]["nodes"].as_array().unwrap().len(), expected);
    assert_eq!(report["output"]["stats"]["nodes"], expected);
    assert_eq!(report["output"]["stats"]["sinks"], 1);
    assert_eq!(report["output"]["stats"]["double_edges"], 0);
}

#[test]
fn graph_guard_error() {
    let out = run(&["graph", "--p", "7", "--q", "7"]);
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(BIN)
        .args(["graph", "--p", "2", "--q", "2"])
        .env("CLAN_SCHUBERT_MAX_CLAN_SIZE", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn dot_rejected_outside_graph() {
    let out = run(&["--format", "dot", "clans", "--p", "1", "--q", "1"]);
    assert!(!out.status.success());
}

#[test]
fn clans_lists_enumeration() {
    let report = json(&["clans", "--p", "2", "--q", "2"]);
    assert_eq!(report["output"]["count"], 21);
}

#[test]
fn verify_small_degrees() {
    for n in ["2", "4", "5"] {
        let report = json(&["verify", "--n", n]);
        assert_eq!(report["verdict"]["status"], "pass", "n = {n}");
        assert_eq!(report["output"]["failed"], 0);
    }
    let report = json(&["verify", "--n", "2"]);
    assert_eq!(report["output"]["cases"], 3);
}

#[test]
fn verify_respects_limits() {
    let report = json(&["verify", "--n", "5", "--max-cases", "7"]);
    assert_eq!(report["output"]["cases"], 7);
    assert!(!run(&["verify", "--n", "7"]).status.success());
}

#[test]
fn table1_rows() {
    let report = json(&["table1"]);
    assert_eq!(report["verdict"]["status"], "identical");
    let rows = report["output"]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 20);
    let row = rows
        .iter()
        .find(|r| r["word"] == serde_json::json!([2, 1, 3, 2, 3, 4]))
        .unwrap();
    assert_eq!((row["clan"].as_str().unwrap(), row["c"].as_u64().unwrap()), ("(1,2,+,2,1)", 1));
}

#[test]
fn oracle_product_restriction() {
    let inside = json(&["oracle-product", "--x", "132", "--y", "132"]);
    assert_eq!(
        inside["output"]["terms"],
        serde_json::json!([{ "w": "231", "coeff": 1 }])
    );
    let all = json(&["oracle-product", "--x", "132", "--y", "132", "--all-terms"]);
    let keys: Vec<&str> = all["output"]["terms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| t["w"].as_str().unwrap())
        .collect();
    assert_eq!(keys, ["1423", "231"]);
}

#[test]
fn output_is_byte_stable() {
    for args in [
        &["product", "--x", "31425", "--y", "14253", "--p", "3", "--verify"][..],
        &["graph", "--p", "2", "--q", "3"][..],
        &["verify", "--n", "4"][..],
    ] {
        assert_eq!(run(args).stdout, run(args).stdout, "{args:?}");
    }
}
