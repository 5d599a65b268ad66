//! End-to-end checks of the command-line surface: exit codes, file
//! round-trips, and the JSON-lines report schema.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use std::sync::atomic::{AtomicUsize, Ordering};

fn workdir(tag: &str) -> PathBuf {
    static COUNTER: AtomicUsize = AtomicUsize::new(0);
    let dir = std::env::temp_dir().join(format!(
        "cubelat-cli-{}-{}-{}",
        std::process::id(),
        tag,
        COUNTER.fetch_add(1, Ordering::Relaxed)
    ));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn cubelat(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cubelat"))
        .args(args)
        .current_dir(dir)
        .env_remove("CUBELAT_WORK_LIMIT")
        .env_remove("CUBELAT_JOBS")
        .output()
        .expect("binary runs")
}

fn stdout_json(output: &Output) -> serde_json::Value {
    serde_json::from_slice(&output.stdout).expect("stdout is JSON")
}

#[test]
fn generate_then_validate_round_trips() {
    let dir = workdir("roundtrip");
    let gen = cubelat(&["generate", "cube", "4", "-o", "q4.json"], &dir);
    assert_eq!(gen.status.code(), Some(0));
    let val = cubelat(&["validate", "q4.json"], &dir);
    assert_eq!(val.status.code(), Some(0));
    let value = stdout_json(&val);
    assert_eq!(value["valid"], serde_json::json!(true));
    assert_eq!(value["vertices"], serde_json::json!(16));
    assert_eq!(value["facets"], serde_json::json!(8));
}

#[test]
fn generate_rejects_bad_parameters() {
    let dir = workdir("badparams");
    let out = cubelat(&["generate", "cube", "1"], &dir);
    assert_eq!(out.status.code(), Some(2));
    let out = cubelat(&["generate", "chain", "2", "5"], &dir);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn chain_generation_matches_formulas() {
    let dir = workdir("chain");
    let gen = cubelat(&["generate", "chain", "3", "3", "-o", "c.json"], &dir);
    assert_eq!(gen.status.code(), Some(0));
    let val = cubelat(&["validate", "c.json"], &dir);
    let value = stdout_json(&val);
    assert_eq!(value["vertices"], serde_json::json!(16));
    assert_eq!(value["facets"], serde_json::json!(14));
    assert_eq!(value["edges"], serde_json::json!(28));
}

#[test]
fn connsum_glues_two_files() {
    let dir = workdir("connsum");
    assert_eq!(cubelat(&["generate", "cube", "3", "-o", "a.json"], &dir).status.code(), Some(0));
    assert_eq!(cubelat(&["generate", "cube", "3", "-o", "b.json"], &dir).status.code(), Some(0));
    let out = cubelat(&["generate", "connsum", "a.json", "b.json", "-o", "sum.json"], &dir);
    assert_eq!(out.status.code(), Some(0));
    let val = stdout_json(&cubelat(&["validate", "sum.json"], &dir));
    assert_eq!(val["vertices"], serde_json::json!(12));
    assert_eq!(val["facets"], serde_json::json!(10));
    assert_eq!(val["edges"], serde_json::json!(20));
}

#[test]
fn corrupted_instance_exits_2() {
    let dir = workdir("corrupt");
    assert_eq!(cubelat(&["generate", "cube", "3", "-o", "q3.json"], &dir).status.code(), Some(0));
    let text = std::fs::read_to_string(dir.join("q3.json")).unwrap();
    // Drop one facet: the boundary stops being a closed pseudo-manifold.
    let mut value: serde_json::Value = serde_json::from_str(&text).unwrap();
    value["facets"].as_array_mut().unwrap().pop();
    std::fs::write(dir.join("broken.json"), value.to_string()).unwrap();
    let out = cubelat(&["verify", "broken.json", "ALL"], &dir);
    assert_eq!(out.status.code(), Some(2));
    let out = cubelat(&["validate", "nonexistent.json"], &dir);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn connectivity_reports_kappa_and_delta() {
    let dir = workdir("conn");
    assert_eq!(cubelat(&["generate", "cube", "3", "-o", "q3.json"], &dir).status.code(), Some(0));
    let out = cubelat(&["connectivity", "q3.json"], &dir);
    assert_eq!(out.status.code(), Some(0));
    let value = stdout_json(&out);
    assert_eq!(value["kappa"], serde_json::json!(3));
    assert_eq!(value["delta"], serde_json::json!(3));
}

#[test]
fn separators_lists_cube_neighborhoods() {
    let dir = workdir("seps");
    assert_eq!(cubelat(&["generate", "cube", "3", "-o", "q3.json"], &dir).status.code(), Some(0));
    let out = cubelat(&["separators", "q3.json", "--size", "3"], &dir);
    assert_eq!(out.status.code(), Some(0));
    let value = stdout_json(&out);
    assert_eq!(value["count"], serde_json::json!(8));
    assert_eq!(value["truncated"], serde_json::json!(false));
    let separators = value["separators"].as_array().unwrap();
    assert_eq!(separators.len(), 8);
    for sep in separators {
        assert_eq!(sep["separator"], serde_json::json!(true));
        assert!(sep["neighborhood_of"].is_number());
    }
    // Size below kappa is an input error.
    let out = cubelat(&["separators", "q3.json", "--size", "2"], &dir);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn separators_work_limit_exits_3() {
    let dir = workdir("worklimit");
    assert_eq!(cubelat(&["generate", "cube", "4", "-o", "q4.json"], &dir).status.code(), Some(0));
    let out = cubelat(&["separators", "q4.json", "--size", "4", "--work-limit", "10"], &dir);
    assert_eq!(out.status.code(), Some(3));
    let value = stdout_json(&out);
    assert_eq!(value["error"], serde_json::json!("work-limit"));
}

#[test]
fn work_limit_env_var_applies_and_flag_wins() {
    let dir = workdir("env");
    assert_eq!(cubelat(&["generate", "cube", "4", "-o", "q4.json"], &dir).status.code(), Some(0));
    let out = Command::new(env!("CARGO_BIN_EXE_cubelat"))
        .args(["separators", "q4.json", "--size", "4"])
        .current_dir(&dir)
        .env("CUBELAT_WORK_LIMIT", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3), "env var limit applies");
    let out = Command::new(env!("CARGO_BIN_EXE_cubelat"))
        .args(["separators", "q4.json", "--size", "4", "--work-limit", "100000"])
        .current_dir(&dir)
        .env("CUBELAT_WORK_LIMIT", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "flag beats env var");
}

#[test]
fn verify_emits_json_lines_and_exit_0() {
    let dir = workdir("verify");
    assert_eq!(cubelat(&["generate", "cube", "4", "-o", "q4.json"], &dir).status.code(), Some(0));
    let out = cubelat(&["verify", "q4.json", "ALL", "-o", "report.jsonl"], &dir);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(dir.join("report.jsonl")).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 14);
    for line in &lines {
        let value: serde_json::Value = serde_json::from_str(line).expect("valid JSON line");
        for key in ["claim", "instance", "passed", "witness", "ms"] {
            assert!(value.get(key).is_some(), "missing {key}");
        }
        let passed = &value["passed"];
        assert!(
            passed == &serde_json::json!(true) || passed == &serde_json::json!("n/a"),
            "unexpected outcome on the 4-cube: {passed}"
        );
    }
}

#[test]
fn verify_subset_of_claims() {
    let dir = workdir("subset");
    assert_eq!(cubelat(&["generate", "cube", "3", "-o", "q3.json"], &dir).status.code(), Some(0));
    let out = cubelat(&["verify", "q3.json", "balinski", "euler-edges"], &dir);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 2);
    let out = cubelat(&["verify", "q3.json", "no-such-claim"], &dir);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_is_deterministic_modulo_timing() {
    let dir = workdir("determinism");
    assert_eq!(cubelat(&["generate", "chain", "3", "2", "-o", "c.json"], &dir).status.code(), Some(0));
    let strip = |raw: &[u8]| -> String {
        String::from_utf8(raw.to_vec())
            .unwrap()
            .lines()
            .map(|line| {
                let mut v: serde_json::Value = serde_json::from_str(line).unwrap();
                v.as_object_mut().unwrap().remove("ms");
                v.to_string()
            })
            .collect::<Vec<_>>()
            .join("\n")
    };
    let a = cubelat(&["verify", "c.json", "ALL"], &dir);
    let b = cubelat(&["verify", "c.json", "ALL"], &dir);
    assert_eq!(strip(&a.stdout), strip(&b.stdout));
}

#[test]
fn report_summarizes_and_flags_failures() {
    let dir = workdir("report");
    assert_eq!(cubelat(&["generate", "cube", "3", "-o", "q3.json"], &dir).status.code(), Some(0));
    assert_eq!(
        cubelat(&["verify", "q3.json", "ALL", "-o", "r.jsonl"], &dir).status.code(),
        Some(0)
    );
    let out = cubelat(&["report", "r.jsonl"], &dir);
    assert_eq!(out.status.code(), Some(0));
    // A hand-written failing line must flip the exit code.
    let mut text = std::fs::read_to_string(dir.join("r.jsonl")).unwrap();
    text.push_str(
        "{\"claim\":\"balinski\",\"instance\":\"synthetic\",\"passed\":false,\"witness\":{},\"ms\":0.1}\n",
    );
    std::fs::write(dir.join("bad.jsonl"), text).unwrap();
    let out = cubelat(&["report", "bad.jsonl"], &dir);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn jobs_flag_does_not_change_output() {
    let dir = workdir("jobs");
    assert_eq!(cubelat(&["generate", "cube", "4", "-o", "q4.json"], &dir).status.code(), Some(0));
    let a = cubelat(&["separators", "q4.json", "--size", "4"], &dir);
    let b = cubelat(&["separators", "q4.json", "--size", "4", "--jobs", "4"], &dir);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(b.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}
