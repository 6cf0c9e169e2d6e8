use std::fs;
use std::process::{Command, Output};

use mhs_core::Status;
use mhs_harness::output::from_json;

fn mhs(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mhs"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn show_dual() {
    let out = mhs(&["show", "dual", "1,1,2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "(3,1)");
    let bad = mhs(&["show", "dual", "1,0"]);
    assert!(!bad.status.success());
}

#[test]
fn json_report_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let out = mhs(&[
        "verify",
        "classical",
        "--max-weight",
        "3",
        "--max-N",
        "3",
        "--max-e",
        "1",
        "--report",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let text = fs::read_to_string(&path).unwrap();
    let reports = from_json(&text).unwrap();
    assert!(!reports.is_empty());
    assert!(reports.iter().all(|r| r.status == Status::Pass));
    assert!(text.contains("\"elapsed_ms\""));
    assert!(stdout(&out).contains("0 fail"));
}

#[test]
fn deterministic_reports_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str| {
        let path = dir.path().join(name);
        let out = mhs(&[
            "verify",
            "connector",
            "--max-weight",
            "3",
            "--max-N",
            "3",
            "--order",
            "2",
            "--deterministic",
            "--report",
            path.to_str().unwrap(),
        ]);
        assert!(out.status.success());
        fs::read(path).unwrap()
    };
    let a = run("a.json");
    assert_eq!(a, run("b.json"));
    assert!(!String::from_utf8(a).unwrap().contains("elapsed_ms"));
}

#[test]
fn only_filter_and_csv() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.csv");
    let out = mhs(&[
        "sweep",
        "--only",
        "q-ohno",
        "--max-weight",
        "2",
        "--max-N",
        "2",
        "--max-e",
        "1",
        "--q",
        "1/2",
        "--format",
        "csv",
        "--report",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "identity,params,status,lhs,rhs,reason,elapsed_ms"
    );
    let rows: Vec<&str> = lines.collect();
    assert!(!rows.is_empty());
    assert!(rows.iter().all(|r| r.starts_with("q-ohno,")));
}

#[test]
fn primes_below_guard_are_skipped_not_failed() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let out = mhs(&[
        "verify",
        "fmzv",
        "--only",
        "s,s-star",
        "--max-weight",
        "4",
        "--primes",
        "5..7",
        "--report",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let reports = from_json(&fs::read_to_string(&path).unwrap()).unwrap();
    let skipped: Vec<_> = reports.iter().filter(|r| r.status == Status::Skipped).collect();
    assert!(!skipped.is_empty());
    assert!(skipped
        .iter()
        .all(|r| r.reason.as_deref().unwrap().starts_with("guard")));
    assert!(reports.iter().all(|r| r.status != Status::Fail));
}

#[test]
fn config_file_with_flag_override() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("sweep.cfg");
    fs::write(&cfg, "max_weight = 2\nmax_N = 2\nonly = euler\n").unwrap();
    let path = dir.path().join("r.json");
    let out = mhs(&[
        "sweep",
        "--config",
        cfg.to_str().unwrap(),
        "--max-N",
        "4",
        "--report",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let reports = from_json(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(reports.len(), 4);
    assert!(reports.iter().all(|r| r.identity == "euler"));

    fs::write(&cfg, "max_weight = 2\nmax_N = two\n").unwrap();
    let out = mhs(&["sweep", "--config", cfg.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2: max_N"));
}

#[test]
fn rejects_bad_flags() {
    assert!(!mhs(&["sweep", "--q", "3/2"]).status.success());
    assert!(!mhs(&["verify", "everything"]).status.success());
    assert!(!mhs(&["sweep", "--format", "xml"]).status.success());
}
