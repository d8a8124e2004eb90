//! End-to-end checks of the `verify` binary: exit codes, output shape, and
//! byte-identical JSON reports for identical configurations.

use std::process::{Command, Output};

fn verify(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_verify"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn dims_suite_reports_the_counts_and_exits_zero() {
    let out = verify(&["dims"]);
    assert!(out.status.success(), "{out:?}");
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("PASS dims/theta-n2"), "{stdout}");
    assert!(stdout.contains("2+4+2 = 8"), "{stdout}");
    assert!(stdout.contains("3+9+8 = 20"), "{stdout}");
}

#[test]
fn metric_suite_runs_on_the_exact_backend() {
    let out = verify(&["metric", "--backend", "exact"]);
    assert!(out.status.success(), "{out:?}");
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("PASS metric/diag"), "{stdout}");
    assert!(stdout.contains("diag(+1, -1, -1, -1)"), "{stdout}");
}

#[test]
fn unknown_suite_and_bad_flags_exit_two() {
    let out = verify(&["no-such-suite"]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("unknown suite"), "{stderr}");

    let out = verify(&["dims", "--backend", "quantum"]);
    assert_eq!(out.status.code(), Some(2));

    let out = verify(&["dims", "--tolerance", "-1"]);
    assert_eq!(out.status.code(), Some(2));

    let out = verify(&["dims", "--no-such-flag"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn impossible_tolerance_fails_with_exit_one() {
    let out = verify(&["vector-rep", "--tolerance", "1e-30", "--samples", "5"]);
    assert_eq!(out.status.code(), Some(1), "{out:?}");
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("FAIL"), "{stdout}");
}

#[test]
fn identical_seeds_give_byte_identical_json() {
    let dir = tempfile::tempdir().unwrap();
    let first = dir.path().join("first.json");
    let second = dir.path().join("second.json");
    for (path, _) in [(&first, 0), (&second, 1)] {
        let out = verify(&[
            "all",
            "--seed",
            "7",
            "--samples",
            "5",
            "--json",
            path.to_str().unwrap(),
        ]);
        assert!(out.status.success(), "{out:?}");
    }
    let a = std::fs::read(&first).unwrap();
    let b = std::fs::read(&second).unwrap();
    assert_eq!(a, b, "reports must be byte-identical");
    // A different seed must change the bytes (the seed is recorded).
    let third = dir.path().join("third.json");
    let out = verify(&[
        "all",
        "--seed",
        "8",
        "--samples",
        "5",
        "--json",
        third.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert_ne!(a, std::fs::read(&third).unwrap());
}

#[test]
fn json_reports_deserialize_with_the_expected_fields() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = verify(&["anticommutation", "--json", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    let parsed: serde_json::Value = serde_json::from_str(&text).unwrap();
    let entries = parsed.as_array().unwrap();
    assert!(!entries.is_empty());
    for entry in entries {
        for field in ["name", "status", "residual", "samples", "seed", "details"] {
            assert!(entry.get(field).is_some(), "missing {field} in {entry}");
        }
        assert_eq!(entry["status"], "pass");
    }
}
