use std::process::{Command, Output};

use qcli::export::{MultiplicationTable, TransitionExport};
use qcli::product::parse_shape;
use qcli::suites::VerifyReport;

fn qschur(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qschur"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn product_of_odd_rank_one_elements() {
    let o = qschur(&[
        "product",
        "--n",
        "2",
        "--r",
        "1",
        "--left",
        r#"{"a1":[[0,1],[0,0]]}"#,
        "--right",
        r#"{"a1":[[0,0],[1,0]]}"#,
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o).trim(),
        "[ [[1,0],[0,0]] | O ] (match: formula=oracle)"
    );
}

#[test]
fn product_with_shapes_identity_and_mismatched_weights() {
    let o = qschur(&[
        "product",
        "--n",
        "2",
        "--r",
        "2",
        "--left",
        "E 1 lambda=[0,2]",
        "--right",
        r#"{"a0":[[0,0],[1,1]]}"#,
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(
        stdout(&o).contains("(match: formula=oracle)"),
        "{}",
        stdout(&o)
    );
    let a = r#"{"a0":[[1,0],[0,0]],"a1":[[0,1],[0,0]]}"#;
    let o = qschur(&[
        "product", "--n", "2", "--r", "2", "--left", "identity", "--right", a,
    ]);
    assert_eq!(stdout(&o).trim(), "[ [[1,0],[0,0]] | [[0,1],[0,0]] ]");
    let o = qschur(&[
        "product",
        "--n",
        "2",
        "--r",
        "2",
        "--left",
        "D lambda=[0,2]",
        "--right",
        a,
    ]);
    assert_eq!(stdout(&o).trim(), "0");
}

#[test]
fn bad_input_and_limits_exit_with_two() {
    let o = qschur(&[
        "product", "--n", "2", "--r", "1", "--left", "{", "--right", "identity",
    ]);
    assert_eq!(o.status.code(), Some(2));
    let o = qschur(&[
        "product",
        "--n",
        "2",
        "--r",
        "2",
        "--left",
        r#"{"a1":[[0,1],[0,0]]}"#,
        "--right",
        "identity",
    ]);
    assert_eq!(o.status.code(), Some(2));
    let o = qschur(&["verify", "--suite", "sdp", "--n", "2", "--rmax", "9"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("resource limit"));
    let o = qschur(&["verify", "--suite", "nonsense"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_examples_pass() {
    for args in [
        ["--suite", "relations", "--n", "2", "--r", "2"],
        ["--suite", "sdp", "--n", "3", "--rmax", "4"],
        ["--suite", "formulas", "--n", "2", "--r", "3"],
    ] {
        let o = qschur(&[&["verify"][..], &args[..]].concat());
        assert_eq!(
            o.status.code(),
            Some(0),
            "{args:?}: {}",
            String::from_utf8_lossy(&o.stderr)
        );
        let report: VerifyReport = serde_json::from_str(&stdout(&o)).unwrap();
        assert!(report.passed() && !report.checks.is_empty());
    }
}

#[test]
fn formulas_report_counts_each_kind() {
    let o = qschur(&["verify", "--suite", "formulas", "--n", "2", "--r", "3"]);
    let report: VerifyReport = serde_json::from_str(&stdout(&o)).unwrap();
    let formulas = report.checks.iter().find(|c| c.id == 5).unwrap();
    for kind in [
        "even raising",
        "odd lowering",
        "divided raising powers",
        "special products",
    ] {
        assert!(formulas.counts[kind] > 0, "{kind}");
    }
}

#[test]
fn verify_all_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let mut texts = Vec::new();
    for (k, jobs) in ["1", "4"].iter().enumerate() {
        let path = dir.path().join(format!("report{k}.json"));
        let o = qschur(&[
            "verify",
            "--suite",
            "all",
            "--n",
            "2",
            "--rmax",
            "2",
            "--seed",
            "11",
            "--jobs",
            jobs,
            "--out",
            path.to_str().unwrap(),
        ]);
        assert_eq!(
            o.status.code(),
            Some(0),
            "{}",
            String::from_utf8_lossy(&o.stderr)
        );
        texts.push(std::fs::read_to_string(path).unwrap());
    }
    assert_eq!(texts[0], texts[1]);
    let report: VerifyReport = serde_json::from_str(&texts[0]).unwrap();
    assert_eq!(report.checks.len(), 10);
}

#[test]
fn export_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let o = qschur(&[
        "export",
        "--n",
        "2",
        "--r",
        "1",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(dir.path().join("table.json")).unwrap();
    let table: MultiplicationTable = serde_json::from_str(&text).unwrap();
    assert_eq!(table.columns.len(), 8);
    assert_eq!(serde_json::to_string_pretty(&table).unwrap(), text);
    assert_eq!(table, MultiplicationTable::build(2, 1).unwrap());
    for row in &table.rows {
        assert_eq!(parse_shape(&row.descriptor).unwrap(), row.shape);
        assert_eq!(row.shape.matrix().unwrap(), row.left);
    }
    let text = std::fs::read_to_string(dir.path().join("transition.json")).unwrap();
    let t: TransitionExport = serde_json::from_str(&text).unwrap();
    assert!(t.invertible && t.rank == t.size && t.size == 8);
    assert_ne!(t.determinant, "0");
    assert_eq!(t.transition.determinant().to_string(), t.determinant);
}
