//! End-to-end tests against the built binary: exit codes, golden output,
//! JSON shape, and error reporting.

use serde_json::Value;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_snc-spectrum"))
}

fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("utf-8 stderr")
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(data_dir().join("golden").join(name)).expect("golden file")
}

fn path(name: &str) -> String {
    data_dir().join(name).to_string_lossy().into_owned()
}

fn write_temp(dir: &Path, name: &str, content: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, content).expect("write temp file");
    path
}

#[test]
fn irregular_matches_golden_files() {
    for name in ["p2-three-lines", "p2-hesse", "p1-mirror", "a1-linear"] {
        let output = run(&["irregular", &path(&format!("{name}.json"))]);
        assert!(output.status.success(), "{name}: {}", stderr(&output));
        assert_eq!(stdout(&output), golden(&format!("{name}.txt")), "{name}");
    }
}

#[test]
fn spectrum_reports_diagnostics_and_checks() {
    let output = run(&[
        "spectrum",
        &path("p2-three-lines.json"),
        "--check",
        "full",
    ]);
    assert!(output.status.success());
    let text = stdout(&output);
    assert!(text.contains("Sp_psi = -9"));
    assert!(text.contains("Sp_f(1) = 9"));
    assert!(text.contains("palindrome about 2: yes"));
    assert!(text.contains("Mobius round trip: yes"));
}

#[test]
fn json_outputs_carry_schema_version() {
    for args in [
        vec!["irregular".to_string(), path("p2-hesse.json")],
        vec!["spectrum".to_string(), path("p2-hesse.json")],
        vec!["kkp".to_string(), path("p2-hesse.json")],
        vec!["catalog".to_string(), "P2".to_string()],
        vec!["check".to_string(), path("p1-mirror.json")],
        vec![
            "batch".to_string(),
            data_dir().to_string_lossy().into_owned(),
        ],
    ] {
        let mut full = args;
        full.push("--json".into());
        let output = bin().args(&full).output().expect("binary runs");
        assert!(output.status.success(), "{full:?}: {}", stderr(&output));
        let doc: Value = serde_json::from_str(&stdout(&output)).expect("valid json");
        assert_eq!(doc["schema_version"], 1, "{full:?}");
    }
}

#[test]
fn batch_is_deterministic_across_parallelism() {
    let dir = data_dir().to_string_lossy().into_owned();
    let sequential = run(&["batch", &dir, "--jobs", "1"]);
    let parallel = run(&["batch", &dir, "--jobs", "8"]);
    assert!(sequential.status.success());
    assert_eq!(sequential.stdout, parallel.stdout);
    assert_eq!(stdout(&sequential), golden("batch.txt"));
}

#[test]
fn batch_isolates_per_file_failures() {
    let temp = std::env::temp_dir().join(format!("snc-spectrum-batch-{}", std::process::id()));
    std::fs::create_dir_all(&temp).unwrap();
    std::fs::copy(data_dir().join("p2-hesse.json"), temp.join("p2-hesse.json")).unwrap();
    write_temp(&temp, "broken.json", "{ not json");
    let output = run(&["batch", &temp.to_string_lossy()]);
    assert_eq!(output.status.code(), Some(1));
    let text = stdout(&output);
    assert!(text.contains("broken.json: failed"));
    assert!(text.contains("p2-hesse.json: ok"));
    assert!(text.contains("1 ok, 1 failed, 0 identity failures"));
    std::fs::remove_dir_all(&temp).unwrap();
}

#[test]
fn malformed_json_reports_position_and_exits_1() {
    let temp = std::env::temp_dir();
    let path = write_temp(&temp, "snc-spectrum-malformed.json", "{\n  \"ambient\": ");
    let output = run(&["irregular", &path.to_string_lossy()]);
    assert_eq!(output.status.code(), Some(1));
    let err = stderr(&output);
    assert!(err.contains("line"), "{err}");
    assert!(err.contains("column"), "{err}");
    std::fs::remove_file(path).unwrap();
}

#[test]
fn non_reduced_divisor_exits_1_naming_the_hypothesis() {
    let temp = std::env::temp_dir();
    let path = write_temp(
        &temp,
        "snc-spectrum-nonreduced.json",
        r#"{
            "ambient": {"dim": 2, "h": [[1,0,0],[0,1,0],[0,0,1]]},
            "components": [{"label": "2E", "multiplicity": 2}],
            "strata": [{"subset": [0], "hodge": {"dim": 1, "h": [[1,1],[1,1]]}}],
            "z_strata": [],
            "flags": {"strongly_nondegenerate": true}
        }"#,
    );
    let output = run(&["irregular", &path.to_string_lossy()]);
    assert_eq!(output.status.code(), Some(1));
    assert!(stderr(&output).contains("reduced pole divisor"));
    std::fs::remove_file(path).unwrap();
}

#[test]
fn check_reports_violations_and_exits_1() {
    let temp = std::env::temp_dir();
    let path = write_temp(
        &temp,
        "snc-spectrum-baddim.json",
        r#"{
            "ambient": {"dim": 2, "h": [[1,0,0],[0,1,0],[0,0,1]]},
            "components": [{"label": "D", "multiplicity": 1}],
            "strata": [{"subset": [0], "hodge": {"dim": 2, "h": [[1,0,0],[0,1,0],[0,0,1]]}}],
            "z_strata": [],
            "flags": {}
        }"#,
    );
    let output = run(&["check", &path.to_string_lossy()]);
    assert_eq!(output.status.code(), Some(1));
    let text = stdout(&output);
    assert!(text.contains("invalid"));
    assert!(text.contains("dim 2, expected 1"));
    std::fs::remove_file(path).unwrap();
}

#[test]
fn check_passes_on_bundled_corpus() {
    for name in ["p2-three-lines", "p2-hesse", "p1-mirror", "a1-linear"] {
        let output = run(&["check", &path(&format!("{name}.json"))]);
        assert!(output.status.success(), "{name}: {}", stderr(&output));
        let text = stdout(&output);
        assert!(text.contains(": ok"));
        assert!(text.contains("Mobius round trip: yes"));
    }
}

#[test]
fn kkp_verdicts_with_weight_files() {
    let temp = std::env::temp_dir();
    let good = write_temp(
        &temp,
        "snc-spectrum-w-good.json",
        r#"{"0,2": 1, "1,1": 10, "2,0": 1}"#,
    );
    let output = run(&["kkp", &path("p2-hesse.json"), "--weights", &good.to_string_lossy()]);
    assert!(output.status.success());
    let text = stdout(&output);
    assert!(text.contains("kkp equality: holds"));
    assert!(text.contains("hodge-tate shape: yes"));

    // An elliptic-curve-shaped limit: same total dimension, not Hodge-Tate.
    let bad = write_temp(
        &temp,
        "snc-spectrum-w-bad.json",
        r#"{"0,2": 2, "1,1": 8, "2,0": 2}"#,
    );
    let output = run(&["kkp", &path("p2-hesse.json"), "--weights", &bad.to_string_lossy()]);
    assert!(output.status.success());
    let text = stdout(&output);
    assert!(text.contains("kkp equality: fails at (p,q) = (0,2)"));
    assert!(text.contains("hodge-tate shape: no"));

    // Mismatched totals are a shape error.
    let short = write_temp(&temp, "snc-spectrum-w-short.json", r#"{"1,1": 10}"#);
    let output = run(&["kkp", &path("p2-hesse.json"), "--weights", &short.to_string_lossy()]);
    assert_eq!(output.status.code(), Some(1));
    assert!(stderr(&output).contains("total dimensions disagree"));

    for file in [good, bad, short] {
        std::fs::remove_file(file).unwrap();
    }
}

#[test]
fn catalog_prints_quintic_diamond() {
    let output = run(&["catalog", "hypersurface", "n=4", "d=5"]);
    assert!(output.status.success());
    let text = stdout(&output);
    assert!(text.contains("101"));
    assert!(text.contains("dim 3"));
}

#[test]
fn out_flag_writes_the_report_to_a_file() {
    let target = std::env::temp_dir().join(format!("snc-spectrum-out-{}.txt", std::process::id()));
    let output = run(&[
        "irregular",
        &path("p2-three-lines.json"),
        "--out",
        &target.to_string_lossy(),
    ]);
    assert!(output.status.success());
    assert!(stdout(&output).is_empty());
    assert_eq!(std::fs::read_to_string(&target).unwrap(), golden("p2-three-lines.txt"));
    std::fs::remove_file(target).unwrap();
}

#[test]
fn cli_text_polynomials_parse_back() {
    for name in ["p2-three-lines", "p2-hesse", "p1-mirror", "a1-linear"] {
        let output = run(&["irregular", &path(&format!("{name}.json"))]);
        let text = stdout(&output);
        let sp_line = text
            .lines()
            .find(|l| l.starts_with("Sp_f = "))
            .unwrap_or_else(|| panic!("no Sp_f line in {text}"));
        let poly: snc_spectrum::FracPoly =
            sp_line.trim_start_matches("Sp_f = ").parse().unwrap();
        assert_eq!(format!("Sp_f = {poly}"), sp_line);
    }
}
