#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

pub fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

/// Runs the binary from the crate directory, so session paths stay relative in reports.
pub fn daolab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_daolab")).args(args).current_dir(crate_dir()).output().expect("spawn daolab")
}

pub fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

pub fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

pub fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).expect("utf-8")
}

pub fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("bad JSON ({}): {}", e, stdout(o)))
}

pub fn validator() -> jsonschema::Validator {
    let text = std::fs::read_to_string(crate_dir().join("schema/report.schema.json")).unwrap();
    jsonschema::validator_for(&serde_json::from_str(&text).unwrap()).expect("schema compiles")
}

pub fn schema_errors(v: &jsonschema::Validator, doc: &Value) -> Vec<String> {
    v.iter_errors(doc).map(|e| format!("{} at {}", e, e.instance_path())).collect()
}

/// Compares against `tests/golden/<name>`; `DAOLAB_BLESS=1` rewrites the file instead.
pub fn golden(name: &str, actual: &str) {
    let path = crate_dir().join("tests/golden").join(name);
    if std::env::var_os("DAOLAB_BLESS").is_some() {
        std::fs::write(&path, actual).unwrap();
        return;
    }
    let expected = std::fs::read_to_string(&path)
        .unwrap_or_else(|_| panic!("missing golden file {}; rerun with DAOLAB_BLESS=1", path.display()));
    assert!(expected == actual, "{} differs from its golden file:\n{}", name, first_difference(&expected, actual));
}

fn first_difference(a: &str, b: &str) -> String {
    for (n, (x, y)) in a.lines().zip(b.lines()).enumerate() {
        if x != y {
            return format!("line {}:\n  golden: {}\n  actual: {}", n + 1, x, y);
        }
    }
    format!("line counts {} vs {}", a.lines().count(), b.lines().count())
}

pub fn session(name: &str) -> String {
    format!("sessions/{}", name)
}

pub fn exists(p: &Path) -> bool {
    p.exists()
}
