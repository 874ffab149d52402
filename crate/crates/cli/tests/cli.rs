use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use mibs::{exact_solution_character, Character};
use tempfile::TempDir;

fn mibs(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mibs"))
        .args(args)
        .env_remove("MIBS_MAX_ORDER")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, body).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn enumerate_order_4_lists_three_indices() {
    let o = mibs(&["enumerate", "--order", "4", "--kind", "indices"]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<String> = stdout(&o).lines().map(String::from).collect();
    assert_eq!(lines, ["z0 z1^3", "z0^2 z1 z2", "z0^3 z3"]);
}

#[test]
fn enumerate_json_counts_trees() {
    let o = mibs(&["enumerate", "--order", "5", "--kind", "trees", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["count"], 9);
}

#[test]
fn exact_round_trips_through_json() {
    let o = mibs(&["exact", "--order", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let a: Character = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(a, exact_solution_character(5).unwrap());
}

#[test]
fn substituting_the_identity_field_returns_the_method() {
    let dir = TempDir::new().unwrap();
    let id = write(
        dir.path(),
        "id_z0.json",
        r#"{"order":4,"empty":"0","values":[{"index":{"0":1},"coeff":"1"}]}"#,
    );
    let a = write(dir.path(), "a.json", &stdout(&mibs(&["exact", "--order", "4"])));
    let o = mibs(&["substitute", &id, &a]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let got: Character = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(got, exact_solution_character(4).unwrap());
}

#[test]
fn composing_the_flow_with_itself_doubles_the_step() {
    let dir = TempDir::new().unwrap();
    let a = write(dir.path(), "a.json", &stdout(&mibs(&["exact", "--order", "3"])));
    let o = mibs(&["compose", &a, &a, "--format", "text"]);
    let text = stdout(&o);
    assert!(text.contains("z0^2 z2  8/3"), "{text}");
    assert!(text.contains("z0 z1^2  4/3"), "{text}");
}

#[test]
fn substitution_hypothesis_is_a_usage_error() {
    let dir = TempDir::new().unwrap();
    let a = write(dir.path(), "a.json", &stdout(&mibs(&["exact", "--order", "3"])));
    let o = mibs(&["substitute", &a, &a]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn rk4_reports_order_four() {
    let o = mibs(&["rk", "--builtin", "rk4", "--order", "5"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["order_report"]["order"], 4);
}

#[test]
fn tableau_file_with_inconsistent_c_warns() {
    let dir = TempDir::new().unwrap();
    let t = write(
        dir.path(),
        "t.json",
        r#"{"a":[["0","0"],["1/2","0"]],"b":["0","1"],"c":["0","1/3"]}"#,
    );
    let o = mibs(&["rk", "--tableau", &t, "--order", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["warnings"].as_array().unwrap().len(), 1);
}

#[test]
fn verify_passes_at_low_order() {
    let o = mibs(&["verify", "--suite", "novikov", "--max-order", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["passed"], true);
}

#[test]
fn stats_prints_one_row_per_order() {
    let o = mibs(&["stats", "--max-order", "6"]);
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 7);
    assert!(text.lines().last().unwrap().contains("20/7"));
}

#[test]
fn exit_codes() {
    assert_eq!(mibs(&["enumerate", "--order", "0"]).status.code(), Some(1));
    assert_eq!(mibs(&["enumerate", "--order", "7"]).status.code(), Some(1));
    assert_eq!(mibs(&["nonsense"]).status.code(), Some(1));
    assert_eq!(mibs(&["--help"]).status.code(), Some(0));
    assert_eq!(
        mibs(&["compose", "/nonexistent/a.json", "/nonexistent/b.json"])
            .status
            .code(),
        Some(1)
    );

    let dir = TempDir::new().unwrap();
    let bad = write(dir.path(), "bad.json", "{not json");
    assert_eq!(mibs(&["compose", &bad, &bad]).status.code(), Some(3));
    let bad_tableau = write(dir.path(), "t.json", r#"{"a":[["0"]],"b":["1","0"],"c":["0"]}"#);
    assert_eq!(mibs(&["rk", "--tableau", &bad_tableau]).status.code(), Some(3));
}

#[test]
fn ceiling_can_be_raised_from_the_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_mibs"))
        .args(["enumerate", "--order", "7"])
        .env("MIBS_MAX_ORDER", "7")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 11);
}
