//! Verification reports shared by every checking routine.

use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Status {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
    /// The printed closed form disagrees with ground truth that was itself confirmed
    /// by an independent route. Does not fail a run.
    #[serde(rename = "ERRATUM")]
    Erratum,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Erratum => "ERRATUM",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub expected: String,
    pub actual: String,
    #[serde(rename = "ref")]
    pub reference: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    #[serde(rename = "PASS")]
    pub pass: usize,
    #[serde(rename = "FAIL")]
    pub fail: usize,
    #[serde(rename = "ERRATUM")]
    pub erratum: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<Check>,
    pub summary: Summary,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Report {
            suite: suite.into(),
            checks: Vec::new(),
            summary: Summary::default(),
        }
    }

    pub fn push(&mut self, check: Check) {
        match check.status {
            Status::Pass => self.summary.pass += 1,
            Status::Fail => self.summary.fail += 1,
            Status::Erratum => self.summary.erratum += 1,
        }
        self.checks.push(check);
    }

    /// Records a check whose status is decided by comparing `expected` with `actual`.
    pub fn compare<T: PartialEq + fmt::Display>(
        &mut self,
        name: impl Into<String>,
        expected: T,
        actual: T,
        reference: impl Into<String>,
    ) -> bool {
        let ok = expected == actual;
        self.push(Check {
            name: name.into(),
            status: Status::from_bool(ok),
            expected: expected.to_string(),
            actual: actual.to_string(),
            reference: reference.into(),
        });
        ok
    }

    pub fn record(
        &mut self,
        name: impl Into<String>,
        status: Status,
        expected: impl Into<String>,
        actual: impl Into<String>,
        reference: impl Into<String>,
    ) {
        self.push(Check {
            name: name.into(),
            status,
            expected: expected.into(),
            actual: actual.into(),
            reference: reference.into(),
        });
    }

    /// Appends all checks of `other`, prefixing their names with its suite.
    pub fn absorb(&mut self, other: Report) {
        for mut check in other.checks {
            check.name = format!("{}/{}", other.suite, check.name);
            self.push(check);
        }
    }

    /// True iff no check has status FAIL.
    pub fn passed(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn checks_with(&self, status: Status) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(move |c| c.status == status)
    }
}
