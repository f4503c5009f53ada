use std::process::{Command, Output};

use serde_json::Value;

fn tworow(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tworow")).args(args).env_remove("TWOROW_OUTPUT_DIR").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_lines(o: &Output) -> Vec<Value> {
    stdout(o).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn immanant_text_for_p4() {
    let o = tworow(&["immanant", "--tree", "path:4", "--shape", "3,1", "--normalized"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "1 + 3q^2 + 4/3 q^4");
    let o = tworow(&["immanant", "--tree", "path:4", "--shape", "2,2", "--normalized", "--algorithm", "bruteforce"]);
    assert_eq!(stdout(&o).trim(), "1 + 2q^2 + 2q^4");
}

#[test]
fn determinant_and_permanent_of_p2() {
    let det = tworow(&["immanant", "--tree", "pruefer:", "--shape", "1,1"]);
    assert_eq!(stdout(&det).trim(), "1 - q^2");
    let per = tworow(&["immanant", "--tree", "path:2", "--shape", "2", "--format", "json"]);
    assert_eq!(json_lines(&per)[0]["coeffs"], serde_json::json!(["1/1", "0/1", "1/1"]));
}

#[test]
fn alpha_table_csv() {
    let o = tworow(&["alpha-table", "6", "--format", "csv"]);
    assert_eq!(stdout(&o), "i,k=0,k=1,k=2,k=3\n0,1,5,9,5\n1,1,4,6,3\n2,1,3,4,2\n3,1,2,3,1\n");
    let direct = tworow(&["alpha-table", "6", "--format", "csv", "--method", "characters"]);
    assert_eq!(stdout(&direct), stdout(&o));
}

#[test]
fn last_table_methods_agree() {
    let o = tworow(&["last-table", "5", "--format", "json"]);
    let v = &json_lines(&o)[0];
    assert_eq!(v["methods_agree"], true);
    assert_eq!(v["rows"][5], serde_json::json!(["1", "4", "10", "15", "15", "6"]));
}

#[test]
fn character_values() {
    assert_eq!(stdout(&tworow(&["char", "3,1", "2,1^2"])).trim(), "1");
    assert_eq!(stdout(&tworow(&["char", "2,2", "2,2"])).trim(), "2");
    let o = tworow(&["char", "3,1", "2,2", "--format", "json"]);
    assert_eq!(json_lines(&o)[0]["value"], "-1");
}

#[test]
fn a_coeffs_of_star() {
    let o = tworow(&["a-coeffs", "--tree", "star:5"]);
    assert_eq!(stdout(&o), "a_0 = 1 - q^2\na_1 = 4q^2\na_2 = 0\n");
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["immanant", "--tree", "cycle:4", "--shape", "3,1"],
        vec!["immanant", "--tree", "path:4", "--shape", "1,3"],
        vec!["immanant", "--tree", "path:4", "--shape", "3,2"],
        vec!["immanant", "--tree", "path:12", "--shape", "12", "--algorithm", "bruteforce"],
        vec!["verify", "all", "--n-max", "10"],
        vec!["verify", "paths", "--tree", "path:5"],
        vec!["verify", "general-sr", "--l", "3"],
        vec!["verify", "hook", "--q-grid", "1:0:1"],
        vec!["alpha-table"],
        vec!["frobnicate"],
    ] {
        let o = tworow(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn tree_file_input() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p4.txt");
    std::fs::write(&path, "4\n1 2\n2 3\n3 4\n").unwrap();
    let lit = format!("file:{}", path.display());
    let o = tworow(&["immanant", "--tree", &lit, "--shape", "3,1", "--normalized"]);
    assert_eq!(stdout(&o).trim(), "1 + 3q^2 + 4/3 q^4");
}

#[test]
fn single_tree_verdicts() {
    let o = tworow(&["verify", "two-row", "--tree", "path:4"]);
    assert_eq!(o.status.code(), Some(0));
    let lines = json_lines(&o);
    assert_eq!(lines[0]["holds"], false);
    assert_eq!(lines[0]["degenerate"], true);
    assert_eq!(lines.last().unwrap()["summary"]["failed"], 0);

    let o = tworow(&["verify", "hook", "--tree", "pruefer:1,2,3", "--format", "text"]);
    assert!(o.status.success());
    assert!(stdout(&o).lines().filter(|l| l.starts_with("PASS")).count() >= 2);
}

#[test]
fn general_sr_single_point() {
    let o = tworow(&["verify", "general-sr", "--l", "6", "--s", "2", "--r", "3"]);
    assert!(o.status.success());
    let lines = json_lines(&o);
    assert!(lines.iter().any(|v| v["claim"] == "rem12"));
}

#[test]
fn alpha_ratios_report_known_counterexamples() {
    let o = tworow(&["verify", "alpha-ratios", "--quiet", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("claim,params,holds,degenerate,detail"));
    let failing: Vec<&str> = lines.collect();
    assert_eq!(failing.iter().filter(|l| l.starts_with("lem9,")).count(), 3);
    assert_eq!(failing.iter().filter(|l| l.starts_with("cor10,")).count(), 39);
    assert_eq!(failing.len(), 42);
}

#[test]
fn probability_and_identities_pass() {
    for target in ["probability", "identities", "paths", "general-sr"] {
        let o = tworow(&["verify", target, "--n-max", "5", "--quiet"]);
        assert_eq!(o.status.code(), Some(0), "{target}");
        let lines = json_lines(&o);
        assert_eq!(lines.len(), 1, "{target}");
        assert_eq!(lines[0]["summary"]["failed"], 0);
    }
}

#[test]
fn output_dir_from_env() {
    let dir = tempfile::tempdir().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_tworow"))
        .args(["alpha-table", "4", "--format", "json", "--output", "a4.json"])
        .env("TWOROW_OUTPUT_DIR", dir.path())
        .output()
        .unwrap();
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(dir.path().join("a4.json")).unwrap();
    let v: Value = serde_json::from_str(text.trim()).unwrap();
    assert_eq!(v["rows"][0], serde_json::json!(["1", "3", "2"]));
}

#[test]
fn verify_output_is_deterministic() {
    let args = ["verify", "two-row", "--n-max", "8", "--random-trees", "20", "--seed", "7"];
    let a = tworow(&args);
    let b = tworow(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}
