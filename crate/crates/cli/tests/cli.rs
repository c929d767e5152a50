use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use bigon_cli::report::{verify_small, verify_t, VerificationReport};
use serde_json::Value;

fn tmp(name: &str) -> PathBuf {
    let d = std::env::temp_dir().join(format!("bigon-cli-{}-{name}", std::process::id()));
    let _ = fs::remove_dir_all(&d);
    d
}

fn bigon(out: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bigon")).arg("--out-dir").arg(out).args(args).output().unwrap()
}

fn json(path: PathBuf) -> Value {
    serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn verify_single() {
    let d = tmp("single");
    let o = bigon(&d, &["verify", "--t", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let r = json(d.join("verify/t4.json"));
    assert_eq!(r["checks"].as_array().unwrap().len(), 9);
    assert_eq!(r["pass"], true);
    assert!(r.get("timing").is_none());
}

#[test]
fn verify_ranges() {
    let d = tmp("range");
    assert_eq!(bigon(&d, &["verify", "--t-range", "4..32"]).status.code(), Some(0));
    assert_eq!(json(d.join("verify/range_4_31.json")).as_array().unwrap().len(), 28);
    assert_eq!(bigon(&d, &["verify", "--t-range", "4..=32"]).status.code(), Some(0));
    assert_eq!(json(d.join("verify/range_4_32.json")).as_array().unwrap().len(), 29);
}

#[test]
fn usage_errors() {
    let d = tmp("usage");
    let o = bigon(&d, &["verify", "--t", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("smallcase"));
    assert_eq!(bigon(&d, &["enumerate", "--t", "4", "--alpha", "2"]).status.code(), Some(2));
    assert_eq!(bigon(&d, &["verify", "--t-range", "9..4"]).status.code(), Some(2));
    assert_eq!(bigon(&d, &["smallcase", "--t", "5"]).status.code(), Some(2));
    assert_eq!(bigon(&d, &["emit", "nope", "--t", "4"]).status.code(), Some(2));
}

#[test]
fn enumerate_counts() {
    let d = tmp("enum");
    assert!(bigon(&d, &["enumerate", "--t", "5", "--alpha", "2"]).status.success());
    let c = json(d.join("enumerate/t5_alpha2.json"));
    let rows = c["completions"].as_array().unwrap();
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0]["slidable"], true);
    assert!(bigon(&d, &["enumerate", "--t", "4", "--alpha", "1"]).status.success());
    let c = json(d.join("enumerate/t4_alpha1.json"));
    assert_eq!(c["completions"].as_array().unwrap().len(), 2);
}

#[test]
fn emit_artifacts() {
    let d = tmp("emit");
    assert!(bigon(&d, &["emit", "gts", "--t", "5", "--format", "dot"]).status.success());
    let dot = fs::read_to_string(d.join("emit/gts_t5.dot")).unwrap();
    assert!(dot.starts_with("graph gts_t5 {"));
    assert_eq!(dot.lines().filter(|l| l.contains(" -- ")).count(), 15);
    assert_eq!(dot.lines().filter(|l| l.contains("[label=\"") && !l.contains(" -- ")).count(), 5);
    assert!(bigon(&d, &["emit", "gs", "--t", "4", "--format", "json"]).status.success());
    assert_eq!(json(d.join("emit/gs_t4.json"))["class_sizes"], serde_json::json!([6, 4, 2]));
    assert!(bigon(&d, &["emit", "mt", "--t", "4", "--format", "json"]).status.success());
    let mt = json(d.join("emit/mt_t4.json"));
    assert_eq!(mt["cut_model"]["t"], 4);
    assert!(mt["mt"]["completion"].is_object());
}

#[test]
fn smallcase_and_scan() {
    let d = tmp("small");
    let o = bigon(&d, &["smallcase", "--t", "2"]);
    assert!(o.status.success());
    let c = json(d.join("smallcase/t2.json"));
    assert!(c["case"]["faces"].as_array().unwrap().iter().all(|f| f["length"] == 4));
    let o = bigon(&d, &["scan", "--t-max", "1000"]);
    assert_eq!(String::from_utf8_lossy(&o.stdout).trim(), "n=4 t=4 delta=6");
    let o = bigon(&d, &["scan", "--delta-min", "7"]);
    assert!(o.status.success());
    assert_eq!(json(d.join("scan/scan.json"))["solutions"], serde_json::json!([]));
}

#[test]
fn out_dir_from_env() {
    let d = tmp("env");
    let o = Command::new(env!("CARGO_BIN_EXE_bigon"))
        .env("OUTPUT_DIR", &d)
        .args(["--jobs", "2", "verify", "--t", "5"])
        .output()
        .unwrap();
    assert!(o.status.success());
    assert!(d.join("verify/t5.json").exists());
}

#[test]
fn report_pass_logic() {
    let mut r = VerificationReport::new("x");
    r.check("same", 1, 1);
    assert!(r.pass);
    r.check("differs", [1, 2], [2, 1]);
    assert!(!r.pass);
    assert_eq!(r.passed(), 1);
    assert!(verify_t(6).pass);
    assert!(verify_small(3).pass);
    assert!(!verify_t(3).pass);
}
