//! End-to-end checks of the command-line surface: output formats, shared
//! numeric content between text and JSON, exit codes.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_snchar"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn char_values_and_engines() {
    assert_eq!(stdout(&["char", "3,1", "1,1,1,1"]).trim(), "3");
    assert_eq!(stdout(&["char", "4", "2,2"]).trim(), "1");
    assert_eq!(stdout(&["char", "1,1,1", "3"]).trim(), "1");
    // frequency form on the command line
    assert_eq!(stdout(&["char", "3,1", "1^4", "--engine", "mn"]).trim(), "3");
    // both engines agree on a spread of pairs
    for (lambda, mu) in [
        ("2,2", "2,1,1"),
        ("3,2,1", "3,2,1"),
        ("4,2,2", "2,2,2,1,1"),
        ("1,1,1,1,1", "5"),
    ] {
        let out = stdout(&["char", lambda, mu, "--engine", "both"]);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines.len(), 2);
        assert_eq!(lines[0].strip_prefix("ct "), lines[1].strip_prefix("mn "));
    }
}

#[test]
fn tableaux_count() {
    assert_eq!(stdout(&["f", "3,2"]).trim(), "5");
    assert_eq!(stdout(&["f", "2,2"]).trim(), "2");
}

#[test]
fn sum_tables() {
    let catalan = stdout(&[
        "sum", "--family", "rows_bounded", "--r", "2", "--s", "2", "--n", "1..6",
    ]);
    assert_eq!(catalan, "1\t1\n2\t2\n3\t5\n4\t14\n5\t42\n6\t132\n");
    assert_eq!(
        stdout(&["sum", "--family", "hook", "--s", "2", "--mu0", "2", "--n", "4"]).trim(),
        "4\t4"
    );
    assert_eq!(
        stdout(&["sum", "--family", "two_row", "--s", "2", "--n", "4"]).trim(),
        "4\t14"
    );
    // --power is an alias for --s
    assert_eq!(
        stdout(&["sum", "--family", "all_shapes", "--power", "2", "--n", "5"]).trim(),
        "5\t120"
    );
}

#[test]
fn text_and_json_carry_the_same_numbers() {
    let text = stdout(&["phi2", "--mu0", "3", "--n", "4..8"]);
    let json = stdout(&["phi2", "--mu0", "3", "--n", "4..8", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&json).unwrap();
    let values = doc["values"].as_array().unwrap();
    let text_rows: Vec<(&str, &str)> = text
        .lines()
        .map(|l| l.split_once('\t').unwrap())
        .collect();
    assert_eq!(values.len(), text_rows.len());
    for (v, (n, value)) in values.iter().zip(&text_rows) {
        assert_eq!(v["n"].to_string(), *n);
        assert_eq!(v["value"].to_string(), *value);
    }

    let text = stdout(&["closedform", "psi2", "--mu0", "2"]);
    assert_eq!(
        text.trim(),
        "R(n) = (n^2 - 5*n + 9)/(4*n^3 - 4*n^2 - 5*n + 3); base = C(2n,n); valid_from = 2"
    );
    let json = stdout(&["closedform", "psi2", "--mu0", "2", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(doc["formula"]["num"].to_string(), "[9,-5,1]");
    assert_eq!(doc["formula"]["den"].to_string(), "[3,-5,-4,4]");
    assert_eq!(doc["formula"]["base"], "C(2n,n)");
    assert_eq!(doc["formula"]["valid_from"], 2);
    assert_eq!(doc["certified_range"].to_string(), "[2,20]");
}

#[test]
fn catalog_enumeration_matches_the_expected_prefixes() {
    let text = stdout(&["catalog", "phi2", "--max-weight", "4"]);
    let mu0s: Vec<&str> = text
        .lines()
        .map(|l| {
            l.split(" | ")
                .nth(1)
                .unwrap()
                .strip_prefix("mu0=")
                .unwrap()
        })
        .collect();
    assert_eq!(mu0s, vec!["", "2", "3", "4", "2,2"]);

    let json = stdout(&["catalog", "psi2", "--max-weight", "2", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&json).unwrap();
    let entries = doc.as_array().unwrap();
    assert_eq!(entries.len(), 2);
    assert_eq!(entries[0]["mu0"].to_string(), "[]");
    assert_eq!(entries[1]["mu0"].to_string(), "[2]");
}

#[test]
fn guess_prints_recurrence_and_report() {
    let out = stdout(&[
        "guess",
        "--family",
        "rows_bounded",
        "--r",
        "2",
        "--s",
        "2",
        "--n",
        "0..30",
    ]);
    assert!(out.contains("(-4*n - 2)*a(n) + (n + 2)*a(n+1) = 0"), "{out}");
    assert!(out.contains("order = 1; degree = 1"), "{out}");
    assert!(out.contains("holdout"), "{out}");

    let json = stdout(&[
        "guess",
        "--family",
        "rows_bounded",
        "--r",
        "2",
        "--s",
        "2",
        "--n",
        "0..30",
        "--format",
        "json",
    ]);
    let doc: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(doc["order"], 1);
    assert_eq!(doc["degree"], 1);
    assert_eq!(doc["coeffs"].to_string(), "[[-2,-4],[2,1]]");
    assert_eq!(doc["verified"], true);
}

#[test]
fn exit_codes() {
    // 2: input validation
    assert_eq!(run(&["char", "3,1", "1,1,1"]).status.code(), Some(2));
    assert_eq!(run(&["char", "0,2", "2"]).status.code(), Some(2));
    assert_eq!(
        run(&["sum", "--family", "rows_bounded", "--s", "2", "--n", "4"])
            .status
            .code(),
        Some(2),
        "rows_bounded without --r"
    );
    assert_eq!(
        run(&["phi2", "--mu0", "2,1", "--n", "5"]).status.code(),
        Some(2),
        "prefix with a part below 2"
    );
    // 4: no recurrence within the bounds
    assert_eq!(
        run(&[
            "guess",
            "--family",
            "rows_bounded",
            "--r",
            "3",
            "--s",
            "2",
            "--n",
            "0..30",
            "--max-order",
            "1",
            "--max-degree",
            "0",
        ])
        .status
        .code(),
        Some(4)
    );
    // clap usage errors are also input validation
    assert_eq!(run(&["sum", "--family", "nonsense", "--n", "4"]).status.code(), Some(2));
}
