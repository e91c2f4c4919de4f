//! End-to-end runs of the `schubert` binary.

use std::process::{Command, Output};

use schubert::cli::{BbReport, DegenerateReport, RootsReport, SchubertReport, WeylReport};
use schubert::rigidity::{Catalog, Status, Verdict, VerifyReport};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_schubert")).args(args).output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let o = run(args);
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    String::from_utf8(o.stdout).unwrap()
}

fn json<T: serde::de::DeserializeOwned + serde::Serialize>(args: &[&str]) -> T {
    let text = stdout(args);
    let v: T = serde_json::from_str(&text).unwrap();
    // re-serializing reproduces the output exactly
    assert_eq!(serde_json::to_string_pretty(&v).unwrap() + "\n", text, "{args:?}");
    v
}

#[test]
fn roots_of_g2() {
    let r: RootsReport = json(&["roots", "G2", "--json"]);
    assert_eq!(r.count, 6);
    assert_eq!(r.positive.last().unwrap().root, "3a1+2a2");
    assert!(stdout(&["roots", "G2"]).starts_with("G2: 6 positive roots"));
}

#[test]
fn weyl_reports() {
    let r: WeylReport = json(&["weyl", "F4", "--json"]);
    assert_eq!(r.order, 1152);
    let r: WeylReport = json(&["weyl", "B2:1", "--w", "1 2", "--json"]);
    assert_eq!(r.minimal_reps.unwrap().len(), 4);
    assert_eq!(r.element.unwrap().length, 2);
}

#[test]
fn schubert_report_for_a_linear_space() {
    let r: SchubertReport = json(&["schubert", "F4:3 / sub=2,3", "--json"]);
    assert_eq!(r.dimension, 3);
    assert_eq!(r.degree, "1");
    assert!(r.linear && r.maximal_linear);
    assert_eq!(r.poincare, vec![1, 1, 1, 1]);
    let same: SchubertReport = json(&["schubert", "F4:3", "--w", "3 2 3", "--json"]);
    assert_eq!(same.tangent_roots, r.tangent_roots);
}

#[test]
fn classify_verdicts() {
    let v: Verdict = json(&["classify", "F4:3", "--sub", "2,3,4", "--json"]);
    assert_eq!(v.status, Status::SchurRigid);
    let v: Verdict = json(&["classify", "F4:3 / sub=2,3", "--json"]);
    assert_eq!(v.status, Status::NotSchurRigid);
    assert_eq!(v.flags.catalog_exception.as_deref(), Some("ML5"));
    let v: Verdict = json(&["classify", "F4:3", "--exc", "B3-a2-a3", "--json"]);
    assert_eq!(v.status, Status::SchurRigid);
    let v: Verdict = json(&["classify", "A3:2", "--w", "1 3 2", "--json"]);
    assert_eq!(v.status, Status::OutOfScope);
}

#[test]
fn catalog_and_verify() {
    let c: Catalog = json(&["catalog", "--json"]);
    assert_eq!(c.entries.len(), 14);
    let list = stdout(&["catalog", "C4:2"]);
    assert!(list.contains("exc=C3-a2-a1"), "{list}");
    let r: Vec<VerifyReport> = json(&["verify", "F4:3", "G2:2", "--json"]);
    assert_eq!(r.len(), 2);
    assert!(r.iter().all(|r| r.failures == 0));
    assert!(stdout(&["verify"]).contains("total mismatches: 0"));
}

#[test]
fn bb_cells_and_degenerate() {
    let r: BbReport = json(&["bb-cells", "A3:1", "--I", "2", "--json"]);
    assert_eq!(r.closed_orbits, 1);
    assert_eq!(r.cells.len(), 3);

    let dir = tempfile::tempdir().unwrap();
    let empty = dir.path().join("empty.json");
    std::fs::write(&empty, "").unwrap();
    let r: DegenerateReport =
        json(&["degenerate", "A3:1", "--w", "1", "--I", "2", "--points", empty.to_str().unwrap(), "--json"]);
    assert!(r.limits.is_empty() && r.transverse);

    let pts = dir.path().join("pts.json");
    std::fs::write(&pts, r#"[{"coords":{"7":"2","10":"5"}},{"coords":{"7":"2"}},{"coords":{"7":"3/2"}}]"#).unwrap();
    let r: DegenerateReport =
        json(&["degenerate", "A3:1", "--w", "1", "--I", "2", "--points", pts.to_str().unwrap(), "--json"]);
    assert_eq!(r.limits.len(), 2);
    assert_eq!(r.limits[0].multiplicity, 2);
    assert_eq!(r.limits[1].coords["7"], "3/2");
    assert!(!r.transverse);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["classify", "F4:3 / exc=C2-a2-a1", "--json"][..],
        &["catalog", "F4:3", "--json"],
        &["verify", "F4:3", "--json"],
        &["schubert", "C3:2 / w=3 2 3 1 2", "--json"],
    ] {
        assert_eq!(stdout(args), stdout(args), "{args:?}");
    }
    assert_eq!(
        stdout(&["verify", "B4:2", "--json"]),
        stdout(&["verify", "B4:2", "--json", "--sequential"])
    );
}

#[test]
fn input_errors_exit_2_with_one_line() {
    for (args, token) in [
        (&["roots", "Q4"][..], "Q4"),
        (&["classify", "F4:9 / sub=1"], "9"),
        (&["classify", "F4:3", "--w", "3 x"], "x"),
        (&["classify", "F4:3", "--sub", "1,2"], "3"),
        (&["classify", "F4:3", "--exc", "nope"], "nope"),
        (&["schubert", "A3:1", "--w", "1 2"], "minimal"),
        (&["classify", "F4:3"], "F4:3"),
        (&["bb-cells", "A3:1", "--I", "1,2,3"], "I"),
        (&["degenerate", "A3:1", "--w", "1", "--I", "2", "--points", "/nonexistent/p.json"], "nonexistent"),
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        let err = String::from_utf8(o.stderr).unwrap();
        assert_eq!(err.lines().count(), 1, "{args:?}: {err}");
        assert!(err.contains(token), "{args:?}: {err}");
        assert!(o.stdout.is_empty());
    }
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}
