use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use lieb::cli::report::{CheckFileReport, SampleReport, SolveReport};

fn lieb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lieb")).args(args).env_remove("LIEB_SEED").output().unwrap()
}

fn catalog(id: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join(format!("data/catalog/{id}.lieb"))
        .to_string_lossy()
        .into_owned()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn construct_then_check() {
    let dir = tempfile::tempdir().unwrap();
    let out: PathBuf = dir.path().join("delta.lieb");
    let o = lieb(&["construct", &catalog("qt"), "--op", "delta-from-r", "--arg", "sl2", "--arg", "r", "--name", "dr", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = std::fs::read_to_string(&out).unwrap();
    assert!(text.contains("coalgebra dr on"));
    let o = lieb(&["check", out.to_str().unwrap(), "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let r: CheckFileReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(r.checks.iter().any(|c| c.kind == "lie-coalgebra" && c.arguments == ["dr"]));
}

#[test]
fn unknown_construction_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("x.lieb");
    let o = lieb(&["construct", &catalog("qt"), "--op", "nope", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!out.exists());
}

#[test]
fn catalog_listing_show_and_export() {
    let o = lieb(&["catalog", "list"]);
    assert_eq!(o.status.code(), Some(0));
    let listing = stdout(&o);
    assert_eq!(listing.lines().count(), lieb::catalog::SOURCES.len());
    assert!(listing.lines().any(|l| l.starts_with("nij-family-4")));

    let o = lieb(&["catalog", "show", "nij-family-4", "--bind", "k1=0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(!stdout(&o).contains("k1"));

    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("n.lieb");
    let o = lieb(&["catalog", "export", "nsl2", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let o = lieb(&["check", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));

    assert_eq!(lieb(&["catalog", "show", "missing"]).status.code(), Some(2));
    assert_eq!(lieb(&["catalog", "show", "sl2", "--bind", "zeta=1"]).status.code(), Some(2));
}

#[test]
fn solve_reports_dimensions() {
    let o = lieb(&["solve", &catalog("sl2"), "--problem", "weak-symplectic", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let r: SolveReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!((r.dimension, r.unknown_dimension), (3, 3));
    let o = lieb(&["solve", &catalog("sl2"), "--problem", "ad-invariance"]);
    assert!(stdout(&o).contains("dimension 1"));
}

#[test]
fn identity_filter_and_extra_assumptions() {
    let o = lieb(&["check", &catalog("qt"), "--identity", "cybe", "--format", "json"]);
    let r: CheckFileReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r.checks.len(), 1);
    assert_eq!(r.checks[0].kind, "cybe");

    let o = lieb(&["check", &catalog("nij-family-6"), "--assume", "k3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    let r: CheckFileReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(r.assumptions.contains(&"k3 != 0".to_string()));

    let o = lieb(&["check", &catalog("sl2"), "--assume", "zeta"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn sampling_is_seeded() {
    let run = |seed: Option<&str>| {
        let mut c = Command::new(env!("CARGO_BIN_EXE_lieb"));
        c.args(["solve", &catalog("nij-family-6"), "--problem", "sample", "--format", "json"]);
        match seed {
            Some(s) => c.env("LIEB_SEED", s),
            None => c.env_remove("LIEB_SEED"),
        };
        c.output().unwrap()
    };
    let a = run(Some("7"));
    assert_eq!(a.status.code(), Some(1));
    let r: SampleReport = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(r.seed, 7);
    assert_eq!(r.results[0].outcome, "refuted");
    assert_eq!(stdout(&a), stdout(&run(Some("7"))));
    assert_eq!(run(None).status.code(), Some(1));

    let o = lieb(&["solve", &catalog("nij-family-2"), "--problem", "sample", "--seed", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("evidence, not proof"));
}

#[test]
fn errors_carry_positions() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("bad.lieb");
    std::fs::write(&p, "space L = a b\nalgebra x on V\nend\n").unwrap();
    let o = lieb(&["check", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("bad.lieb:2:"), "{}", stderr(&o));
    assert_eq!(lieb(&["check", "/nonexistent.lieb"]).status.code(), Some(2));
}
