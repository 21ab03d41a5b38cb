use std::process::{Command, Output};

use s3voa_core::fixtures;
use s3voa_core::report::{self, Format, Status};

fn s3voa(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_s3voa")).args(args).output().expect("binary runs")
}

#[test]
fn dims_is_a_finding() {
    let out = s3voa(&["dims", "--case", "iv", "--weight", "2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let reports = report::parse_json(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(reports[0].status, Status::Finding);
    assert_eq!(reports[0].data["dimension"], 4);
}

#[test]
fn corrupted_table_exits_nonzero() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p1.txt");
    let bad = fixtures::GRIESS_P1.replace("mul w3 v0 : 2/3 v0", "mul w3 v0 : 1/3 v0");
    assert_ne!(bad, fixtures::GRIESS_P1);
    std::fs::write(&path, bad).unwrap();
    let out = s3voa(&["gram", "--set", "weight3", "--griess-p1", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stdout).unwrap().contains("fail"));
}

#[test]
fn json_round_trips() {
    let out = s3voa(&["classify", "modules", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let reports = report::parse_json(&text).unwrap();
    assert_eq!(report::emit(&reports, Format::Json), text);
}

#[test]
fn repeated_runs_are_identical() {
    let args = ["verify", "fusion-rings", "--format", "json"];
    assert_eq!(s3voa(&args).stdout, s3voa(&args).stdout);
}

#[test]
fn branching_with_explicit_order() {
    let out = s3voa(&["verify", "branching", "--max-m", "4", "--order", "16"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(s3voa(&["bogus"]).status.code(), Some(2));
    assert_eq!(s3voa(&["gram", "--set", "weight7"]).status.code(), Some(2));
    assert_eq!(s3voa(&["report", "nothing"]).status.code(), Some(2));
}

#[test]
fn config_file_is_overridden_by_flags() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s3voa.conf");
    std::fs::write(&path, "# settings\nformat = json\nseed = 5\ncases = 3\n").unwrap();
    let conf = path.to_str().unwrap();
    let out = s3voa(&["dims", "--case", "i", "--weight", "5", "--config", conf]);
    assert!(String::from_utf8(out.stdout).unwrap().starts_with('['));
    let out = s3voa(&["dims", "--case", "i", "--weight", "5", "--config", conf, "--format", "text"]);
    assert!(String::from_utf8(out.stdout).unwrap().starts_with("check"));
    std::fs::write(&path, "colour = blue\n").unwrap();
    assert_eq!(s3voa(&["list", "--config", conf]).status.code(), Some(2));
    assert_eq!(s3voa(&["dims", "--case", "i", "--weight", "5", "--config", conf]).status.code(), Some(2));
}
