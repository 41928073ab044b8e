use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;
use siglat_cli::report::{to_json, AnalysisReport, BatchReport};

fn siglat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_siglat"))
        .args(args)
        .env_remove("SIGLAT_MAX_ORDER")
        .output()
        .expect("binary runs")
}

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .display()
        .to_string()
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn analyze_s3_sigma0_reports_the_three_element_chain() {
    let out = siglat(&["analyze", "--group", &data("s3.json"), "--partition", "sigma0"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["group"], "S3");
    assert_eq!(v["order"], 6);
    let orders: Vec<u64> = v["lattice"].as_array().unwrap().iter().map(|m| m["order"].as_u64().unwrap()).collect();
    assert_eq!(orders, [1, 3, 6]);
    assert_eq!(v["distributivity"]["direct_distributive"]["holds"], true);
    assert_eq!(v["distributivity"]["verdict"], "consistent");
    assert_eq!(v["violations"].as_array().unwrap().len(), 0);
}

#[test]
fn analyze_a5_with_three_against_the_rest_is_not_full() {
    let out = siglat(&["analyze", "--group", &data("a5.json"), "--partition", "blocks:[3];rest=one_block"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["sigma_full"], false);
    assert!(v.get("distributivity").is_none());
    assert!(v.get("lattice_size").is_none());
}

#[test]
fn analyze_q8_covers_mode_reports_the_center_witness() {
    let out = siglat(&["analyze", "--group", &data("q8.json"), "--partition", "sigma0", "--mode", "covers"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    let d = &v["distributivity"];
    assert_eq!(d["mode"], "covers");
    assert!(d.get("cond_iv_full").is_none());
    let w = &d["cond_iv_covers"]["witness"];
    assert_eq!(w["kind"], "sections");
    assert_eq!(w["normal"]["order"], 1);
    assert_eq!(w["block"], "{2}");
    assert_eq!(w["bottom"]["order"], 2);
    assert_eq!(d["verdict"], "consistent");
}

#[test]
fn markdown_format_goes_to_stdout() {
    let out = siglat(&["analyze", "--group", &data("s3.json"), "--partition", "sigma0", "--format", "md"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("| group |"));
    assert!(text.contains("| S3 | 6 | sigma0 | yes | 3 |"));
}

#[test]
fn out_dir_receives_json_and_markdown() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().display().to_string();
    let out = siglat(&["analyze", "--group", &data("s3.json"), "--partition", "pi:2", "--out", &path]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let json = std::fs::read_to_string(dir.path().join("S3-pi_2.json")).unwrap();
    let report: AnalysisReport = serde_json::from_str(&json).unwrap();
    assert_eq!(to_json(&report), json);
    assert!(dir.path().join("S3-pi_2.md").exists());
}

#[test]
fn corpus_report_round_trips_byte_for_byte() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().display().to_string();
    let out = siglat(&["corpus", "--partitions", "sigma0,pi:2", "--jobs", "2", "--out", &path]);
    assert_eq!(out.status.code(), Some(0));
    let json = std::fs::read_to_string(dir.path().join("corpus.json")).unwrap();
    let batch: BatchReport = serde_json::from_str(&json).unwrap();
    assert_eq!(to_json(&batch), json);
    assert_eq!(batch.partitions, ["sigma0", "pi:2"]);
    let keys: Vec<(String, String)> = batch.reports.iter().map(|r| (r.group.clone(), r.partition.clone())).collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
}

#[test]
fn malformed_group_file_exits_with_usage_code() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("bad.json");
    std::fs::write(&file, "{\n  \"name\": \"S3\",\n  \"degree\": x\n}").unwrap();
    let out = siglat(&["analyze", "--group", &file.display().to_string(), "--partition", "sigma0"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 3, column 13"), "{err}");
}

#[test]
fn bad_generator_exits_with_usage_code() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("bad.json");
    std::fs::write(&file, r#"{"name":"X","degree":3,"generators":["(1 4)"]}"#).unwrap();
    let out = siglat(&["analyze", "--group", &file.display().to_string(), "--partition", "sigma0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bad_partition_exits_with_usage_code() {
    let out = siglat(&["analyze", "--group", &data("s3.json"), "--partition", "pi:4"]);
    assert_eq!(out.status.code(), Some(2));
    let out = siglat(&["corpus", "--partitions", "sigma0,pi:2,9"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("column 13"));
}

#[test]
fn unknown_subcommand_exits_with_usage_code() {
    assert_eq!(siglat(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(siglat(&["analyze", "--partition", "sigma0"]).status.code(), Some(2));
}

#[test]
fn order_cap_skips_and_strict_turns_skips_into_code_three() {
    let relaxed = siglat(&["--max-order", "10", "analyze", "--group", &data("a5.json"), "--partition", "sigma0"]);
    assert_eq!(relaxed.status.code(), Some(0));
    let v = stdout_json(&relaxed);
    assert_eq!(v["skips"].as_array().unwrap().len(), 1);

    let strict = siglat(&["--strict", "--max-order", "10", "analyze", "--group", &data("a5.json"), "--partition", "sigma0"]);
    assert_eq!(strict.status.code(), Some(3));
}

#[test]
fn env_var_mirrors_max_order() {
    let out = Command::new(env!("CARGO_BIN_EXE_siglat"))
        .args(["--strict", "analyze", "--group", &data("a5.json"), "--partition", "sigma0"])
        .env("SIGLAT_MAX_ORDER", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn subgroup_cap_skips_the_group() {
    let out = siglat(&["--strict", "--max-subgroups", "10", "analyze", "--group", &data("a5.json"), "--partition", "sigma0"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn verify_fails_on_skips_even_without_strict() {
    let out = siglat(&["--max-order", "30", "verify", "--partitions", "sigma0"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn verify_passes_on_the_default_sweep() {
    let out = siglat(&["verify", "--format", "md"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("violations: 0, skips: 0"));
}

#[test]
fn hunt_lists_every_pair() {
    let out = siglat(&["hunt", "--partitions", "sigma0,pi:2,3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    let findings = v["findings"].as_array().unwrap();
    assert_eq!(findings.len(), 2 * siglat_cli::builtin_corpus().len());
    let q8 = findings.iter().find(|f| f["group"] == "Q8" && f["partition"] == "sigma0").unwrap();
    assert_eq!(q8["modular"]["holds"], true);
    assert_eq!(q8["distributive"], false);
}
