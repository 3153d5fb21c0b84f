use std::process::{Command, Output};

use serde_json::Value;

fn fibknot(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fibknot"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn reserialize(text: &str) -> String {
    let value: Value = serde_json::from_str(text).unwrap();
    serde_json::to_string_pretty(&value).unwrap() + "\n"
}

#[test]
fn json_output_round_trips_byte_for_byte() {
    for args in [
        &["--format", "json", "fib", "--n", "3", "--j", "2"][..],
        &["--format", "json", "fib", "--n", "11", "--j", "40"],
        &["--format", "json", "fraction", "C(2, -2, 4)"],
        &["--format", "json", "normalize", "17/5"],
        &["--format", "json", "conway", "5 2"],
        &["--format", "json", "alexander", "C(3,2)"],
        &[
            "--format",
            "json",
            "table",
            "--n-range",
            "1..4",
            "--j-range",
            "1..3",
        ],
    ] {
        let out = fibknot(args);
        assert!(out.status.success(), "{args:?}");
        let text = stdout(&out);
        assert_eq!(reserialize(&text), text, "{args:?}");
    }
}

#[test]
fn json_keeps_large_integers_exact() {
    let out = fibknot(&["--format", "json", "fib", "--n", "9", "--j", "60"]);
    let value: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let alpha = value["alpha"].to_string();
    assert!(alpha.len() > 20, "{alpha}");
    assert_eq!(
        value["fraction"]
            .as_str()
            .unwrap()
            .split('/')
            .next()
            .unwrap(),
        alpha
    );
}

#[test]
fn fib_record_fields() {
    let out = fibknot(&["--format", "json", "fib", "--n", "3", "--j", "2"]);
    let value: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["fraction"], "10/3");
    assert_eq!(value["components"], 2);
    assert_eq!(value["match"], true);
}

#[test]
fn table_is_deterministic_across_formats() {
    for format in ["text", "csv", "json"] {
        let args = [
            "--format",
            format,
            "table",
            "--n-range",
            "1..12",
            "--j-range",
            "1..10",
        ];
        let first = fibknot(&args);
        let second = fibknot(&args);
        assert!(first.status.success());
        assert_eq!(first.stdout, second.stdout, "{format}");
    }
}

#[test]
fn csv_table_has_one_row_per_cell() {
    let out = fibknot(&[
        "--format",
        "csv",
        "table",
        "--n-range",
        "2..5",
        "--j-range",
        "1..=7",
    ]);
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 1 + 4 * 7);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["bogus"][..],
        &["fib", "--n", "3"],
        &["fib", "--n", "x", "--j", "1"],
        &["table", "--n-range", "5..1", "--j-range", "1..2"],
        &["--format", "yaml", "fib", "--n", "1", "--j", "1"],
    ] {
        let out = fibknot(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn domain_errors_exit_one() {
    for args in [
        &["fib", "--n", "0", "--j", "2"][..],
        &["alexander", "C(2,2,2)"],
        &["fraction", "3 0 3"],
        &["normalize", "4/6"],
        &["conway", "C(3,x)"],
    ] {
        let out = fibknot(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(
            String::from_utf8_lossy(&out.stderr).starts_with("error: "),
            "{args:?}"
        );
    }
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(fibknot(&["--help"]).status.code(), Some(0));
    assert_eq!(fibknot(&["--version"]).status.code(), Some(0));
}

#[test]
fn verify_passes_at_defaults() {
    let out = fibknot(&["verify"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("0 failed"));
}
