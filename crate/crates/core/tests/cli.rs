//! End-to-end tests against the compiled binary: exit codes, stage
//! chaining, and artifact determinism.

mod common;

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

const SMALL_CONFIG: &str = "\
n_max = 120
n_components = 2
n_interconnect = 4
important_per_group = [3, 2]
n_hbedges = 20
max_support_cardinality = 6
max_important_per_edge = 2
seed = 7
";

fn hbdiff(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hbdiff"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn write_config(dir: &Path) -> String {
    let path = dir.join("config.toml");
    fs::write(&path, SMALL_CONFIG).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(code(&hbdiff(&["--help"])), 0);
    assert_eq!(code(&hbdiff(&["--version"])), 0);
    assert_eq!(code(&hbdiff(&["generate", "--help"])), 0);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(code(&hbdiff(&[])), 2);
    assert_eq!(code(&hbdiff(&["frobnicate"])), 2);
    let out = hbdiff(&["diffuse", "--graph", "g.json", "--steps", "0", "--trace", "t.csv"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("--steps"));
    assert_eq!(
        code(&hbdiff(&["walk", "--graph", "g.json", "--walks", "0", "--out", "w.csv"])),
        2
    );
}

#[test]
fn missing_input_exits_three() {
    let out = hbdiff(&[
        "diffuse",
        "--graph",
        "/nonexistent/graph.json",
        "--trace",
        "/tmp/ignored-trace.csv",
    ]);
    assert_eq!(code(&out), 3);
    assert!(stderr(&out).contains("error[IoError]"), "{}", stderr(&out));
}

#[test]
fn domain_errors_exit_four_with_the_error_name() {
    let dir = tempfile::tempdir().unwrap();
    let bad_version = dir.path().join("version.json");
    fs::write(&bad_version, r#"{"schema_version": 99, "vertices": [], "hbedges": []}"#).unwrap();
    let out = hbdiff(&[
        "diffuse",
        "--graph",
        bad_version.to_str().unwrap(),
        "--trace",
        dir.path().join("t.csv").to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 4);
    assert!(stderr(&out).contains("error[SchemaError]"), "{}", stderr(&out));

    let bad_weight = dir.path().join("weight.json");
    fs::write(
        &bad_weight,
        r#"{
  "schema_version": 1,
  "vertices": [{"id": "v1"}],
  "hbedges": [{"id": "e1", "weight": -1.0, "members": {"v1": 1.0}}]
}"#,
    )
    .unwrap();
    let out = hbdiff(&[
        "walk",
        "--graph",
        bad_weight.to_str().unwrap(),
        "--out",
        dir.path().join("w.csv").to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 4);
    assert!(
        stderr(&out).contains("error[NonPositiveWeight]"),
        "{}",
        stderr(&out)
    );
}

#[test]
fn stages_chain_into_each_other() {
    let dir = tempfile::tempdir().unwrap();
    let config = write_config(dir.path());
    let graph = dir.path().join("graph.json");
    let trace = dir.path().join("trace.csv");
    let walk = dir.path().join("walk.csv");
    let sweeps = dir.path().join("sweeps.csv");
    let dot = dir.path().join("graph.dot");
    let vertices = dir.path().join("vertices.csv");
    let hbedges = dir.path().join("hbedges.csv");

    let out = hbdiff(&["generate", "--config", &config, "--out", graph.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert!(stdout(&out).contains("seed 7"));

    let out = hbdiff(&[
        "diffuse",
        "--graph",
        graph.to_str().unwrap(),
        "--steps",
        "5",
        "--trace",
        trace.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));

    let out = hbdiff(&[
        "walk",
        "--graph",
        graph.to_str().unwrap(),
        "--walks",
        "5",
        "--out",
        walk.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert!(stdout(&out).contains(" s"), "walk reports wall-clock time");

    let out = hbdiff(&[
        "eval",
        "--graph",
        graph.to_str().unwrap(),
        "--trace",
        trace.to_str().unwrap(),
        "--out",
        sweeps.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));

    let out = hbdiff(&[
        "export",
        "--graph",
        graph.to_str().unwrap(),
        "--trace",
        trace.to_str().unwrap(),
        "--dot",
        dot.to_str().unwrap(),
        "--vertices",
        vertices.to_str().unwrap(),
        "--hbedges",
        hbedges.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));

    let trace_text = fs::read_to_string(&trace).unwrap();
    assert!(trace_text.starts_with("kind,id,alpha_0,"));
    assert!(fs::read_to_string(&sweeps).unwrap().starts_with("target,ratio,"));
    assert!(fs::read_to_string(&dot).unwrap().starts_with("graph {"));
    assert!(fs::read_to_string(&walk).unwrap().starts_with("kind,id,passages,rank"));
    assert!(fs::read_to_string(&vertices).unwrap().lines().count() > 1);
    assert!(fs::read_to_string(&hbedges).unwrap().lines().count() > 1);
}

#[test]
fn generate_is_deterministic_and_seed_overrides() {
    let dir = tempfile::tempdir().unwrap();
    let config = write_config(dir.path());
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    let c = dir.path().join("c.json");
    assert_eq!(code(&hbdiff(&["generate", "--config", &config, "--out", a.to_str().unwrap()])), 0);
    assert_eq!(code(&hbdiff(&["generate", "--config", &config, "--out", b.to_str().unwrap()])), 0);
    assert_eq!(
        code(&hbdiff(&[
            "generate", "--config", &config, "--seed", "8", "--out", c.to_str().unwrap()
        ])),
        0
    );
    let a = fs::read(&a).unwrap();
    assert_eq!(a, fs::read(&b).unwrap(), "same seed, same bytes");
    assert_ne!(a, fs::read(&c).unwrap(), "--seed overrides the config");
}

#[test]
fn pipeline_writes_all_artifacts_and_repeats_exactly() {
    let dir = tempfile::tempdir().unwrap();
    let config = write_config(dir.path());
    let first = dir.path().join("first");
    let second = dir.path().join("second");
    for out_dir in [&first, &second] {
        let out = hbdiff(&[
            "pipeline",
            "--config",
            &config,
            "--out-dir",
            out_dir.to_str().unwrap(),
            "--walks",
            "5",
        ]);
        assert_eq!(code(&out), 0, "{}", stderr(&out));
        let text = stdout(&out);
        assert!(text.contains("spearman(diffusion rank, walk rank):"), "{text}");
        assert!(text.contains("diffusion/walk time ratio:"), "{text}");
    }
    for name in [
        "graph.json",
        "trace.csv",
        "walk.csv",
        "sweeps.csv",
        "vertices.csv",
        "hbedges.csv",
        "graph.dot",
    ] {
        let a = fs::read(first.join(name)).unwrap();
        let b = fs::read(second.join(name)).unwrap();
        assert!(!a.is_empty(), "{name} is empty");
        assert_eq!(a, b, "{name} differs between runs");
    }
}
