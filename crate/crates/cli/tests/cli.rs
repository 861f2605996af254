//! End-to-end tests driving the built binary: JSON contracts, exit codes,
//! and byte-level determinism.

use std::io::Write;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_starring"))
}

fn write_doc(dir: &std::path::Path, name: &str, json: &str) -> String {
    let path = dir.join(name);
    let mut f = std::fs::File::create(&path).unwrap();
    writeln!(f, "{json}").unwrap();
    path.to_string_lossy().into_owned()
}

fn parsed(output: &Output) -> serde_json::Value {
    serde_json::from_slice(&output.stdout).expect("stdout is one JSON document")
}

struct Mats {
    a: String,
    b: String,
    w: String,
    _dir: tempdir::TempDir,
}

mod tempdir {
    // minimal scoped temp directory to avoid a dependency
    pub struct TempDir(pub std::path::PathBuf);

    impl TempDir {
        pub fn new(tag: &str) -> Self {
            let mut path = std::env::temp_dir();
            path.push(format!("starring-cli-test-{tag}-{}", std::process::id()));
            std::fs::create_dir_all(&path).unwrap();
            TempDir(path)
        }

        pub fn path(&self) -> &std::path::Path {
            &self.0
        }
    }

    impl Drop for TempDir {
        fn drop(&mut self) {
            let _ = std::fs::remove_dir_all(&self.0);
        }
    }
}

fn first_instance_files(tag: &str) -> Mats {
    let dir = tempdir::TempDir::new(tag);
    let a = write_doc(
        dir.path(),
        "a.json",
        r#"{"domain":"gaussian_rationals","rows":2,"cols":2,"entries":[["1","1"],["0","0"]]}"#,
    );
    let b = write_doc(
        dir.path(),
        "b.json",
        r#"{"domain":"gaussian_rationals","rows":2,"cols":2,"entries":[["1","1"],["2","-2"]]}"#,
    );
    let w = write_doc(
        dir.path(),
        "w.json",
        r#"{"domain":"gaussian_rationals","rows":2,"cols":2,"entries":[["1","0"],["1","0"]]}"#,
    );
    Mats { a, b, w, _dir: dir }
}

#[test]
fn compute_wcore_returns_pinned_value() {
    let mats = first_instance_files("compute");
    let out = bin()
        .args([
            "compute",
            "--kind",
            "wcore",
            "--a",
            &mats.a,
            "--w",
            &mats.w,
            "--no-timestamp",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let doc = parsed(&out);
    assert_eq!(doc["status"], "ok");
    assert_eq!(
        doc["payload"]["value"]["entries"],
        serde_json::json!([["1/2", "0"], ["0", "0"]])
    );
    // value round-trips through the document format
    let value: starring::doc::MatrixDocument =
        serde_json::from_value(doc["payload"]["value"].clone()).unwrap();
    assert!(value.to_matrix().is_ok());
}

#[test]
fn compute_core_failure_carries_reason() {
    let dir = tempdir::TempDir::new("core-fail");
    let a = write_doc(
        dir.path(),
        "a.json",
        r#"{"domain":"rationals","rows":2,"cols":2,"entries":[["0","1"],["0","0"]]}"#,
    );
    let out = bin()
        .args(["compute", "--kind", "core", "--a", &a, "--no-timestamp"])
        .output()
        .unwrap();
    assert!(!out.status.success());
    let doc = parsed(&out);
    assert_eq!(doc["status"], "error");
    assert!(doc["diagnostics"][0]
        .as_str()
        .unwrap()
        .contains("core invertible"));
}

#[test]
fn order_reports_both_modes() {
    let mats = first_instance_files("order");
    let relaxed = bin()
        .args([
            "order",
            "--kind",
            "wcore",
            "--a",
            &mats.a,
            "--b",
            &mats.b,
            "--w",
            &mats.w,
            "--mode",
            "relaxed",
            "--no-timestamp",
        ])
        .output()
        .unwrap();
    assert!(relaxed.status.success());
    let doc = parsed(&relaxed);
    assert_eq!(doc["payload"]["report"]["holds"], true);
    assert_eq!(
        doc["payload"]["characterizations"]
            .as_array()
            .unwrap()
            .len(),
        12
    );

    // strict mode: b is not w-core invertible on this instance
    let strict = bin()
        .args([
            "order",
            "--kind",
            "wcore",
            "--a",
            &mats.a,
            "--b",
            &mats.b,
            "--w",
            &mats.w,
            "--no-timestamp",
        ])
        .output()
        .unwrap();
    assert!(!strict.status.success());

    // the core order fails with the projection equation named
    let core = bin()
        .args([
            "order",
            "--kind",
            "core",
            "--a",
            &mats.a,
            "--b",
            &mats.b,
            "--no-timestamp",
        ])
        .output()
        .unwrap();
    assert!(core.status.success());
    let doc = parsed(&core);
    assert_eq!(doc["payload"]["report"]["holds"], false);
    assert_eq!(
        doc["payload"]["report"]["failed_condition"],
        "a·a^⊕ = b·a^⊕"
    );
}

#[test]
fn examples_is_the_smoke_test() {
    let out = bin().args(["examples", "--no-timestamp"]).output().unwrap();
    assert!(out.status.success());
    let doc = parsed(&out);
    assert_eq!(doc["payload"]["all_passed"], true);
    assert_eq!(doc["payload"]["fixtures"].as_array().unwrap().len(), 3);
}

#[test]
fn verify_exhaustive_z2_subset() {
    let out = bin()
        .args([
            "verify",
            "--id",
            "LEM_MARY_CRITERION",
            "--id",
            "LEM_AW_PRODUCT",
            "--domain",
            "mod_p:2",
            "--dim",
            "2",
            "--exhaustive",
            "--no-timestamp",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let doc = parsed(&out);
    let entries = doc["payload"]["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 2);
    for entry in entries {
        assert_eq!(entry["failure"], serde_json::Value::Null);
        assert_eq!(entry["trials"], 256);
    }
}

#[test]
fn verify_rejects_unknown_property() {
    let out = bin()
        .args(["verify", "--id", "NOPE", "--no-timestamp"])
        .output()
        .unwrap();
    assert!(!out.status.success());
    let doc = parsed(&out);
    assert!(doc["diagnostics"][0].as_str().unwrap().contains("NOPE"));
}

#[test]
fn verify_lists_catalog() {
    let out = bin()
        .args(["verify", "--list", "--no-timestamp"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let doc = parsed(&out);
    assert_eq!(doc["payload"]["catalog"].as_array().unwrap().len(), 32);
}

#[test]
fn identical_flags_identical_bytes() {
    let run = || {
        bin()
            .args([
                "verify",
                "--id",
                "THM_WCORE_12WAY",
                "--domain",
                "gaussian_rationals",
                "--dim",
                "2",
                "--trials",
                "40",
                "--seed",
                "7",
                "--no-timestamp",
            ])
            .output()
            .unwrap()
    };
    let first = run();
    let second = run();
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn timestamp_present_unless_suppressed() {
    let with = bin().args(["examples"]).output().unwrap();
    let doc = parsed(&with);
    assert!(doc["timestamp"].is_u64());
    let without = bin().args(["examples", "--no-timestamp"]).output().unwrap();
    let doc = parsed(&without);
    assert!(doc.get("timestamp").is_none());
}

#[test]
fn enumerate_counts_the_ring() {
    let out = bin()
        .args([
            "enumerate",
            "--domain",
            "mod_p:3",
            "--dim",
            "2",
            "--no-timestamp",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let doc = parsed(&out);
    assert_eq!(doc["payload"]["count"], 81);
    // field domains cannot be enumerated
    let bad = bin()
        .args(["enumerate", "--domain", "rationals", "--no-timestamp"])
        .output()
        .unwrap();
    assert!(!bad.status.success());
}
