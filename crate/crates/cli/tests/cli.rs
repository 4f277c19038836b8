use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn zkgenus(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zkgenus"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
        .display()
        .to_string()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn table_rows_match_reference_values() {
    let out = zkgenus(&["table", "--n-min", "3", "--n-max", "6", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(
        rows[0],
        "n,V,E,F,chi,genus,genus_cf,necklaces,chi_q,genus_q,genus_q_cf,rh,agree"
    );
    assert_eq!(rows[1], "3,8,12,6,2,0,0,4,2,0,0,pass,yes");
    assert_eq!(rows[2], "4,16,32,16,0,1,1,6,2,0,0,pass,yes");
    assert_eq!(rows[4], "6,64,192,96,-32,17,17,14,-2,2,2,pass,yes");
}

#[test]
fn table_json_is_deterministic() {
    let a = zkgenus(&["table", "--format", "json"]);
    let b = zkgenus(&["table", "--format", "json"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let rows: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(rows.as_array().unwrap().len(), 8);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["table", "--n-max", "21"][..],
        &["table", "--n", "2"],
        &["table", "--n-min", "8", "--n-max", "5"],
        &["verify", "--checks", "genus"],
        &["necklace", "--brute-cap", "30"],
        &["frobnicate"],
    ] {
        assert_eq!(zkgenus(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn verify_rh_default_range() {
    let out = zkgenus(&["verify", "--checks", "rh", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["passed"], 8);
    assert_eq!(report["pass"], true);
}

#[test]
fn verify_embed_n5() {
    let out = zkgenus(&[
        "verify", "--checks", "embed", "--n", "5", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    let detail = &report["results"][0]["detail"];
    assert_eq!(detail["faces"], 40);
    assert_eq!(detail["all_quads"], true);
}

#[test]
fn verify_reversed_walk_fixture_fails_with_odd_cycle() {
    let dir = tempfile::tempdir().unwrap();
    let report_path = dir.path().join("report.json");
    let out = zkgenus(&[
        "verify",
        "--checks",
        "orient",
        "--input",
        &fixture("klein_two_squares.json"),
        "--format",
        "json",
        "--out",
        report_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    let report: Value =
        serde_json::from_str(&std::fs::read_to_string(&report_path).unwrap()).unwrap();
    let result = &report["results"][0];
    assert_eq!(result["check"], "orient");
    assert_eq!(result["pass"], false);
    let witness = &result["detail"]["violations"][0];
    assert_eq!(witness["kind"], "orientation_conflict");
    assert_eq!(witness["faces"], serde_json::json!([0, 1]));

    let torus = zkgenus(&["verify", "--input", &fixture("torus_two_squares.json")]);
    assert_eq!(torus.status.code(), Some(0));
}

#[test]
fn verify_input_rejects_family_checks() {
    let out = zkgenus(&[
        "verify",
        "--checks",
        "rh",
        "--input",
        &fixture("torus_two_squares.json"),
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn export_writes_all_artifacts() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let out = zkgenus(&[
        "export",
        "--n-min",
        "3",
        "--n-max",
        "5",
        "--quotient",
        "--out",
        d,
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );

    let read = |name: &str| std::fs::read_to_string(dir.path().join(name)).unwrap();

    let off = read("z_n3.off");
    let mut lines = off.lines();
    assert_eq!(lines.next(), Some("OFF"));
    assert_eq!(lines.next(), Some("8 12 18"));
    assert_eq!(off.lines().filter(|l| l.starts_with("3 ")).count(), 12);

    let edges = read("z_n5.edges");
    assert_eq!(edges.lines().next(), Some("32 80"));
    assert_eq!(edges.lines().count(), 81);

    let q: Value = serde_json::from_str(&read("quotient_n4.json")).unwrap();
    let labels: Vec<&str> = q["cells"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["dim"] == 0)
        .map(|c| c["label"].as_str().unwrap())
        .collect();
    assert_eq!(labels, ["0000", "0001", "0011", "0101", "0111", "1111"]);

    let z: Value = serde_json::from_str(&read("z_n3.json")).unwrap();
    assert_eq!(z["n"], 3);
    assert_eq!(z["cells"].as_array().unwrap().len(), 8 + 12 + 6);
}

#[test]
fn export_is_byte_identical_across_runs() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    for d in [&a, &b] {
        let out = zkgenus(&[
            "export",
            "--n",
            "6",
            "--quotient",
            "--out",
            d.path().to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0));
    }
    for name in [
        "z_n6.json",
        "z_n6.edges",
        "z_n6.off",
        "quotient_n6.json",
        "quotient_n6.edges",
        "quotient_n6.off",
    ] {
        let x = std::fs::read(a.path().join(name)).unwrap();
        let y = std::fs::read(b.path().join(name)).unwrap();
        assert_eq!(x, y, "{name}");
    }
}

#[test]
fn unwritable_path_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let blocker = dir.path().join("file");
    std::fs::write(&blocker, "").unwrap();
    let target = blocker.join("sub");
    let out = zkgenus(&["export", "--n", "3", "--out", target.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    let out = zkgenus(&["table", "--n", "3", "--out", target.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn necklace_command() {
    let out = zkgenus(&["necklace", "--n", "6", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let rows: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(rows[0]["total"], 14);
    assert_eq!(rows[0]["enumerated"], 14);
    assert_eq!(rows[0]["aperiodic"], 9);
}

#[test]
fn quotient_command_lists_branch_points() {
    let out = zkgenus(&["quotient", "--n", "6", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let rows: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(rows[0]["genus"], 2);
    assert_eq!(rows[0]["branch_points"].as_array().unwrap().len(), 5);
}
