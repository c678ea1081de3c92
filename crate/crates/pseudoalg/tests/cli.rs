//! End-to-end runs of the `pseudoalg` binary: exit codes and JSON output
//! validated against the published schemas.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use jsonschema::{Draft, JSONSchema};
use pseudoalg::io::report::KINDS;
use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_pseudoalg"));
    c.env("PSEUDOAG_THREADS", "2");
    c
}

fn example(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data/examples").join(name)
}

fn schema_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../docs/schema")
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn run_path(cmd: &str, path: &Path, rest: &[&str]) -> Output {
    bin().arg(cmd).arg(path).args(rest).output().expect("binary runs")
}

fn validate(kind: &str, out: &Output) -> Value {
    let doc: Value = serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("{kind}: stdout is not JSON ({e}): {}", String::from_utf8_lossy(&out.stdout)));
    assert_eq!(doc["kind"], kind);
    assert_eq!(doc["format_version"], 1);
    let text = std::fs::read_to_string(schema_dir().join(format!("{kind}.schema.json"))).expect("schema file");
    let schema: Value = serde_json::from_str(&text).expect("schema is JSON");
    let compiled = JSONSchema::options().with_draft(Draft::Draft7).compile(&schema).expect("schema compiles");
    if let Err(errors) = compiled.validate(&doc) {
        let msgs: Vec<String> = errors.map(|e| format!("{} at {}", e, e.instance_path)).collect();
        panic!("{kind}: schema violations:\n{}", msgs.join("\n"));
    }
    doc
}

#[test]
fn every_kind_has_a_schema() {
    for kind in KINDS {
        assert!(schema_dir().join(format!("{kind}.schema.json")).exists(), "{kind}");
    }
}

#[test]
fn check_output_matches_schema() {
    let ok = run_path("check", &example("virasoro.pa"), &["--json"]);
    assert_eq!(ok.status.code(), Some(0));
    let doc = validate("check", &ok);
    assert_eq!(doc["classification"], "lie");

    let bad = run_path("check", &example("broken.pa"), &["--json"]);
    assert_eq!(bad.status.code(), Some(1));
    let doc = validate("check", &bad);
    assert!(!doc["failures"].as_array().unwrap().is_empty());
}

#[test]
fn catalog_outputs_match_schema() {
    let list = run(&["catalog", "list", "--json"]);
    assert_eq!(list.status.code(), Some(0));
    let doc = validate("catalog-list", &list);
    assert!(doc["families"].as_array().unwrap().len() > 20);

    let build = run(&[
        "catalog",
        "build",
        "e14",
        "--json",
        "-p",
        "a00=1",
        "-p",
        "w01=1",
        "-p",
        "lambda1=1/2",
        "-p",
        "kappa1=0",
    ]);
    assert_eq!(build.status.code(), Some(0));
    validate("catalog-build", &build);

    let verify = run(&["catalog", "verify", "c1", "e14", "--draws", "2", "--json"]);
    assert_eq!(verify.status.code(), Some(0));
    let doc = validate("catalog-verify", &verify);
    assert_eq!(doc["all_pass"], true);
}

#[test]
fn solver_outputs_match_schema() {
    let c = run(&["cohomology", "--variant", "lie", "--lambda", "-7", "--kappa", "0", "--degree", "9", "--json"]);
    assert_eq!(c.status.code(), Some(0));
    let doc = validate("cohomology", &c);
    assert_eq!(doc["h2_dim"], 1);

    let m = run(&["enumerate-mtype", "--m-max", "3", "--degree", "8", "--json"]);
    assert_eq!(m.status.code(), Some(0));
    validate("enumerate-mtype", &m);
}

#[test]
fn algebra_outputs_match_schema() {
    let l = run_path("lambda", &example("virasoro.pa"), &["--json"]);
    assert_eq!(l.status.code(), Some(0));
    validate("lambda", &l);

    let d = run_path("derived", &example("virasoro.pa"), &["--json"]);
    assert_eq!(d.status.code(), Some(0));
    let doc = validate("derived", &d);
    assert!(doc["length"].is_null());

    let a = run(&[
        "annihilate",
        "--family",
        "e14",
        "-p",
        "a00=1",
        "-p",
        "lambda1=1/2",
        "-p",
        "kappa1=0",
        "--rho",
        "1/2",
        "--window",
        "-2..2",
        "--verify-jacobi",
        "--table",
        "--json",
    ]);
    assert_eq!(a.status.code(), Some(0), "{}", String::from_utf8_lossy(&a.stderr));
    let doc = validate("annihilate", &a);
    assert_eq!(doc["pass"], true);
    assert!(doc["compare"].is_object() && doc["jacobi"].is_object() && doc["table"].is_object());
}

#[test]
fn exit_codes() {
    assert_eq!(run_path("check", &example("ck_module.pa"), &[]).status.code(), Some(0));
    assert_eq!(run_path("check", &example("broken.pa"), &[]).status.code(), Some(1));
    assert_eq!(run(&["check", "/nonexistent/file.pa"]).status.code(), Some(2));
    assert_eq!(run(&["check", "--no-such-flag"]).status.code(), Some(2));
    assert_eq!(run(&["catalog", "build", "no-such-family"]).status.code(), Some(2));
    assert_eq!(run(&["cohomology", "--variant", "sideways", "--lambda", "0", "--kappa", "0"]).status.code(), Some(2));
    assert_eq!(run(&["annihilate", "--family", "e14", "--rho", "1/2", "--window", "5..1"]).status.code(), Some(2));
}

#[test]
fn syntax_errors_report_a_position() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("bad.pa");
    std::fs::write(&p, "algebra bad\nrank 1\nbracket e0 e0 : e0 <- s|1 +\n").unwrap();
    let out = run_path("check", &p, &[]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 3, column 28"), "{err}");
}

#[test]
fn literal_mode_of_a_refuted_family_exits_one() {
    let out = run(&["catalog", "verify", "c3", "--literal", "--draws", "1"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn family_reference_is_up_to_date() {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../docs/families.md");
    let on_disk = std::fs::read_to_string(&path).expect("docs/families.md");
    assert!(
        on_disk == pseudoalg::catalog::reference_markdown(),
        "docs/families.md is stale; regenerate with `pseudoalg catalog list --markdown > docs/families.md`"
    );
}
