use lambda_count::Report;
use lambda_count_cli::TableDoc;
use std::path::PathBuf;
use std::process::{Command, Output};

fn lcount(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lcount"))
        .args(args)
        .env_remove("LC_MAX_ENUM")
        .env_remove("LC_MAX_CELLS")
        .output()
        .expect("run lcount")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn fixture(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name);
    std::fs::read_to_string(path).unwrap()
}

#[test]
fn count_values() {
    for (args, want) in [
        (
            ["--kind", "T", "--size", "18", "--free", "7"],
            "10816530842627\n",
        ),
        (["--kind", "T", "--size", "0", "--free", "5"], "0\n"),
        (
            ["--kind", "F", "--size", "18", "--free", "8"],
            "6046781201429\n",
        ),
        (["--kind", "G", "--size", "3", "--free", "1"], "1\n"),
        (["--kind", "f", "--size", "3", "--free", "2"], "2\n"),
    ] {
        let out = lcount(&[&["count"][..], &args[..]].concat());
        assert!(out.status.success());
        assert_eq!(stdout(&out), want, "{args:?}");
    }
}

#[test]
fn golden_tables() {
    let t = lcount(&[
        "table",
        "--kind",
        "T",
        "--max-size",
        "18",
        "--max-free",
        "7",
        "--format",
        "csv",
    ]);
    assert_eq!(stdout(&t), fixture("table_T_18x7.csv"));
    let f = lcount(&[
        "table",
        "--kind",
        "F",
        "--max-size",
        "18",
        "--max-free",
        "8",
    ]);
    assert_eq!(stdout(&f), fixture("table_F_18x8.csv"));
}

#[test]
fn golden_polynomials() {
    for (kind, file) in [("T", "poly_T_1-18.txt"), ("NF", "poly_NF_1-18.txt")] {
        for line in fixture(file).lines() {
            let (n, poly) = line.split_once(": ").unwrap();
            let out = lcount(&["poly", "--kind", kind, "--size", n]);
            assert_eq!(stdout(&out).trim_end(), poly, "{kind} {n}");
        }
    }
}

#[test]
fn empty_table_csv() {
    let out = lcount(&["table", "--kind", "T", "--max-size", "0", "--max-free", "0"]);
    assert_eq!(stdout(&out), "n\\m,0\n");
}

#[test]
fn json_table_round_trips() {
    let out = lcount(&[
        "table",
        "--kind",
        "F",
        "--max-size",
        "18",
        "--max-free",
        "8",
        "--format",
        "json",
    ]);
    let text = stdout(&out);
    let doc: TableDoc = serde_json::from_str(&text).unwrap();
    assert_eq!(doc.kind, "F");
    assert_eq!(doc.rows.len(), 18);
    assert_eq!(doc.rows[17][8], "6046781201429");
    assert_eq!(doc.to_json(), text);
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert!(value["rows"][0][0].is_string());
}

#[test]
fn named_table_kind_tag() {
    let out = lcount(&[
        "table",
        "--kind",
        "f",
        "--max-size",
        "3",
        "--max-free",
        "3",
        "--format",
        "json",
    ]);
    let doc: TableDoc = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc.kind, "f");
    assert_eq!(
        doc.rows,
        [
            ["0", "1", "0", "0"],
            ["1", "1", "0", "0"],
            ["2", "2", "2", "0"]
        ]
    );
}

#[test]
fn enumerate_text_and_json() {
    let out = lcount(&["enumerate", "--size", "4", "--free", "0"]);
    assert_eq!(stdout(&out), "\\\\\\1\n\\\\\\2\n\\\\\\3\n\\(1 1)\n");
    let out = lcount(&[
        "enumerate",
        "--size",
        "4",
        "--free",
        "0",
        "--normal",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["terms"].as_array().unwrap().len(), 4);
    let out = lcount(&["enumerate", "--size", "5", "--free", "1", "--normal"]);
    assert_eq!(stdout(&out).lines().count(), 25);
}

#[test]
fn series_lines() {
    let out = lcount(&["series", "--name", "SFev", "--order", "5"]);
    assert_eq!(stdout(&out), "0: 0\n1: 1\n2: 4\n3: 15\n4: 62\n5: 263\n");
    let out = lcount(&["series", "--name", "Vertical(0)", "--order", "6"]);
    assert_eq!(stdout(&out), "0: 0\n1: 0\n2: 1\n3: 2\n4: 4\n5: 13\n6: 42\n");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(
        lcount(&["count", "--kind", "X", "--size", "1", "--free", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(lcount(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        lcount(&["series", "--name", "Nope", "--order", "3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        lcount(&["verify", "--suite", "everything"]).status.code(),
        Some(2)
    );
}

#[test]
fn resource_refusals_exit_3() {
    let out = lcount(&["enumerate", "--size", "30", "--free", "3"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("max-enum"));
    let out = lcount(&[
        "table",
        "--kind",
        "T",
        "--max-size",
        "10",
        "--max-free",
        "10",
        "--max-cells",
        "50",
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("max-cells"));
}

#[test]
fn limits_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_lcount"))
        .args(["enumerate", "--size", "5", "--free", "1"])
        .env("LC_MAX_ENUM", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    let out = Command::new(env!("CARGO_BIN_EXE_lcount"))
        .args(["table", "--kind", "G", "--max-size", "3", "--max-free", "3"])
        .env("LC_MAX_CELLS", "15")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn verify_all_small_passes() {
    let out = lcount(&[
        "verify",
        "--suite",
        "all",
        "--max-size",
        "14",
        "--order",
        "32",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let text = stdout(&out);
    let report: Report = serde_json::from_str(&text).unwrap();
    assert_eq!(report.suite, "all");
    assert_eq!(report.summary.fail, 0);
    assert!(report.summary.erratum > 0);
    let mut again = serde_json::to_string_pretty(&report).unwrap();
    again.push('\n');
    assert_eq!(again, text);
    // sub-suites appear in a fixed order
    let first = |prefix: &str| {
        report
            .checks
            .iter()
            .position(|c| c.name.starts_with(prefix))
            .unwrap()
    };
    assert!(first("recurrences/") < first("enumeration/"));
    assert!(first("vertical/") < first("named/"));
}

#[test]
fn verify_gf_vs_poly_reports_erratum() {
    let out = lcount(&[
        "verify",
        "--suite",
        "gf-vs-poly",
        "--order",
        "20",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report: Report = serde_json::from_slice(&out.stdout).unwrap();
    let sfev_q4 = report
        .checks
        .iter()
        .find(|c| c.name.starts_with("[z^4]SFev "))
        .unwrap();
    assert_eq!(
        (sfev_q4.expected.as_str(), sfev_q4.actual.as_str()),
        ("62", "62")
    );
    assert!(report.checks.iter().any(
        |c| c.name.contains("NF_second_even q=4") && c.status == lambda_count::Status::Erratum
    ));
}

#[test]
fn verify_text_format() {
    let out = lcount(&[
        "verify",
        "--suite",
        "motzkin",
        "--max-size",
        "6",
        "--format",
        "text",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.lines().any(|l| l.starts_with("ERRATUM strict bound")));
    assert!(text.ends_with("motzkin: 6 passed, 0 failed, 1 errata\n"));
}

#[test]
fn output_is_deterministic() {
    let args = [
        "verify",
        "--suite",
        "all",
        "--max-size",
        "10",
        "--order",
        "12",
        "--format",
        "json",
    ];
    assert_eq!(lcount(&args).stdout, lcount(&args).stdout);
}
