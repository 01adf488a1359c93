use std::path::PathBuf;
use std::process::{Command, Output};

use abelian_lattice::classification::{enumerate_table, full_table, ClassificationRow};
use abelian_lattice::catalog::VerificationReport;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_abelian-lattice"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write_json(dir: &tempfile::TempDir, name: &str, body: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, body).unwrap();
    path
}

#[test]
fn table_p5_text() {
    let o = run(&["table", "--p", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().skip(2).collect();
    assert_eq!(rows, vec!["5  2  0    1  H5"]);
}

#[test]
fn table_json_round_trips() {
    let o = run(&["table", "--p", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let rows: Vec<ClassificationRow> = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(rows.len(), 4);
    assert_eq!(rows, enumerate_table(2).unwrap());

    let all: Vec<ClassificationRow> =
        serde_json::from_slice(&run(&["table", "--format", "json"]).stdout).unwrap();
    assert_eq!(all, full_table().unwrap());
}

#[test]
fn table_rejects_other_primes() {
    assert_eq!(run(&["table", "--p", "7"]).status.code(), Some(2));
    assert_eq!(run(&["table", "--p", "x"]).status.code(), Some(2));
}

#[test]
fn verify_single_and_unknown() {
    let o = run(&["verify", "p5_H5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("p5_H5: PASS"));
    assert_eq!(run(&["verify", "nosuch"]).status.code(), Some(2));
    assert_eq!(run(&["verify"]).status.code(), Some(2));
}

#[test]
fn verify_all_writes_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = run(&["verify", "--all", "--report", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 11);
    let reports: Vec<VerificationReport> =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(reports.len(), 11);
    assert!(reports.iter().all(|r| r.passed));
}

#[test]
fn lattice_info() {
    let dir = tempfile::tempdir().unwrap();
    let h5 = write_json(&dir, "h5.json", r#"{"rank": 2, "gram": [[2, 1], [1, -2]]}"#);
    let o = run(&["lattice-info", h5.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("rank 2, signature (1,1), d=5, 5-elementary a=1\n"));

    let u2 = write_json(&dir, "u2.json", r#"{"rank": 2, "gram": [[0, 2], [2, 0]]}"#);
    let o = run(&["lattice-info", u2.to_str().unwrap()]);
    assert!(stdout(&o).contains("2-elementary a=2, δ=0"));

    let d = write_json(&dir, "d.json", r#"{"rank": 2, "gram": [[2, 0], [0, -2]]}"#);
    assert!(stdout(&run(&["lattice-info", d.to_str().unwrap()])).contains("δ=1"));
}

#[test]
fn lattice_info_input_errors() {
    let dir = tempfile::tempdir().unwrap();
    for (name, body) in [
        ("nonsym.json", r#"{"rank": 2, "gram": [[0, 1], [2, 0]]}"#),
        ("degenerate.json", r#"{"rank": 2, "gram": [[1, 1], [1, 1]]}"#),
        ("float.json", r#"{"rank": 1, "gram": [[2.5]]}"#),
        ("shape.json", r#"{"rank": 3, "gram": [[1, 0], [0, 1]]}"#),
        ("garbage.json", "not json"),
    ] {
        let path = write_json(&dir, name, body);
        let o = run(&["lattice-info", path.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(2), "{name}");
        assert!(!o.stderr.is_empty());
    }
    assert_eq!(run(&["lattice-info", "/nonexistent/x.json"]).status.code(), Some(2));
}

#[test]
fn wedge_reports() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = write_json(
        &dir,
        "c5.json",
        r#"{"rows": 4, "cols": 4, "entries": [[0,0,0,-1],[1,0,0,-1],[0,1,0,-1],[0,0,1,-1]]}"#,
    );
    let text = stdout(&run(&["wedge", c5.to_str().unwrap(), "--fixed"]));
    assert!(text.contains("order on H^1: 5, order on H^2: 5"));
    assert!(text.contains("5-elementary a=1"));
    assert!(text.contains("fixed points: 5"));

    let d = write_json(
        &dir,
        "d.json",
        r#"{"rows": 4, "cols": 4, "entries": [[1,0,0,0],[0,1,0,0],[0,0,-1,0],[0,0,0,-1]]}"#,
    );
    let text = stdout(&run(&["wedge", d.to_str().unwrap(), "--fixed"]));
    assert!(text.contains("fixed points: positive-dimensional"));

    let id = write_json(
        &dir,
        "id.json",
        r#"{"rows": 4, "cols": 4, "entries": [[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]}"#,
    );
    let text = stdout(&run(&["wedge", id.to_str().unwrap()]));
    assert!(text.contains("order on H^1: 1, order on H^2: 1"));
    assert!(text.contains("rank 6, signature (3,3), d=1, unimodular"));
    assert!(text.contains("coinvariant lattice S: rank 0"));
}

#[test]
fn wedge_input_errors() {
    let dir = tempfile::tempdir().unwrap();
    let det2 = write_json(
        &dir,
        "det2.json",
        r#"{"rows": 4, "cols": 4, "entries": [[2,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]}"#,
    );
    assert_eq!(run(&["wedge", det2.to_str().unwrap()]).status.code(), Some(2));
    let small = write_json(&dir, "small.json", r#"{"rows": 2, "cols": 2, "entries": [[1,0],[0,1]]}"#);
    assert_eq!(run(&["wedge", small.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn wedge_orientation_reversing() {
    let dir = tempfile::tempdir().unwrap();
    let flip = write_json(
        &dir,
        "flip.json",
        r#"{"rows": 4, "cols": 4, "entries": [[-1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]}"#,
    );
    let o = run(&["wedge", flip.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("det g = -1"));
}

#[test]
fn check_is_deterministic() {
    let a = run(&["check", "--seed", "5", "--cases", "20"]);
    let b = run(&["check", "--seed", "5", "--cases", "20"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(stdout(&a).lines().filter(|l| l.starts_with("PASS")).count(), 6);
}

#[test]
fn list_shows_every_record() {
    let text = stdout(&run(&["list"]));
    assert_eq!(text.lines().count(), 11);
    assert!(text.lines().any(|l| l.starts_with("symp_order4_product")));
}
