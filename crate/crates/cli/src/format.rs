use lambda_count::{BigCount, CountTable, FTable, Report};
use serde::{Deserialize, Serialize};
use std::fmt::Write;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum TableFormat {
    Csv,
    Json,
}

/// A count rectangle as emitted: rows start at size 1, counts are decimal
/// strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableDoc {
    pub kind: String,
    pub max_size: usize,
    pub max_free: usize,
    pub rows: Vec<Vec<String>>,
}

impl TableDoc {
    fn from_rows(kind: String, max_size: usize, max_free: usize, rows: &[Vec<BigCount>]) -> Self {
        TableDoc {
            kind,
            max_size,
            max_free,
            rows: rows
                .iter()
                .skip(1)
                .map(|r| r.iter().map(BigCount::to_string).collect())
                .collect(),
        }
    }

    pub fn from_count_table(t: &CountTable) -> Self {
        Self::from_rows(t.kind().to_string(), t.max_size(), t.max_free(), t.rows())
    }

    pub fn from_f_table(t: &FTable) -> Self {
        Self::from_rows("f".to_string(), t.max_size(), t.max_vars(), t.rows())
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("n\\m");
        for m in 0..=self.max_free {
            write!(out, ",{m}").unwrap();
        }
        out.push('\n');
        for (i, row) in self.rows.iter().enumerate() {
            write!(out, "{}", i + 1).unwrap();
            for v in row {
                write!(out, ",{v}").unwrap();
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("plain data");
        s.push('\n');
        s
    }
}

pub fn emit_table(doc: &TableDoc, format: TableFormat) -> String {
    match format {
        TableFormat::Csv => doc.to_csv(),
        TableFormat::Json => doc.to_json(),
    }
}

pub fn report_json(report: &Report) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("plain data");
    s.push('\n');
    s
}

/// One line per check, then a summary line.
pub fn report_text(report: &Report) -> String {
    let mut out = String::new();
    for c in &report.checks {
        write!(out, "{:<7} {}", c.status.as_str(), c.name).unwrap();
        if c.expected != c.actual || c.status != lambda_count::Status::Pass {
            write!(out, "  [expected {}, got {}]", c.expected, c.actual).unwrap();
        }
        out.push('\n');
    }
    let s = &report.summary;
    writeln!(
        out,
        "{}: {} passed, {} failed, {} errata",
        report.suite, s.pass, s.fail, s.erratum
    )
    .unwrap();
    out
}
