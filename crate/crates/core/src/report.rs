//! Pass/fail reports with first-witness indices.

use std::fmt;

use serde::Serialize;

pub const REPORT_FORMAT: &str = "dorroh-report/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Error => "ERROR",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    checks: Vec<Check>,
}

#[derive(Serialize)]
struct Summary {
    total: usize,
    passed: usize,
    failed: usize,
    errors: usize,
}

#[derive(Serialize)]
struct ReportDoc<'a> {
    format: &'static str,
    status: Status,
    checks: &'a [Check],
    summary: Summary,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records a named check: `None` witness means it passed.
    pub fn record(&mut self, name: impl Into<String>, witness: Option<Vec<usize>>) -> bool {
        let passed = witness.is_none();
        self.checks.push(Check {
            name: name.into(),
            status: if passed { Status::Pass } else { Status::Fail },
            witness,
            detail: None,
        });
        passed
    }

    pub fn pass(&mut self, name: impl Into<String>) {
        self.record(name, None);
    }

    pub fn fail(&mut self, name: impl Into<String>, witness: Vec<usize>) {
        self.record(name, Some(witness));
    }

    pub fn fail_with(&mut self, name: impl Into<String>, witness: Vec<usize>, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            status: Status::Fail,
            witness: Some(witness),
            detail: Some(detail.into()),
        });
    }

    pub fn error(&mut self, name: impl Into<String>, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            status: Status::Error,
            witness: None,
            detail: Some(detail.into()),
        });
    }

    /// Appends another report's checks, prefixing their names.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for mut c in other.checks {
            if !prefix.is_empty() {
                c.name = format!("{prefix}: {}", c.name);
            }
            self.checks.push(c);
        }
    }

    pub fn checks(&self) -> &[Check] {
        &self.checks
    }

    pub fn status(&self) -> Status {
        if self.checks.iter().any(|c| c.status == Status::Error) {
            Status::Error
        } else if self.checks.iter().any(|c| c.status == Status::Fail) {
            Status::Fail
        } else {
            Status::Pass
        }
    }

    pub fn is_pass(&self) -> bool {
        self.status() == Status::Pass
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| c.status != Status::Pass)
    }

    pub fn failed_names(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|c| c.status != Status::Pass)
            .map(|c| c.name.as_str())
            .collect()
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub(crate) fn headline(&self) -> String {
        match self.first_failure() {
            None => "all checks passed".to_string(),
            Some(c) => match &c.witness {
                Some(w) => format!("{} (witness {:?})", c.name, w),
                None => format!("{} ({})", c.name, c.detail.as_deref().unwrap_or("error")),
            },
        }
    }

    pub fn to_json(&self) -> String {
        let count = |s| self.checks.iter().filter(|c| c.status == s).count();
        let doc = ReportDoc {
            format: REPORT_FORMAT,
            status: self.status(),
            checks: &self.checks,
            summary: Summary {
                total: self.checks.len(),
                passed: count(Status::Pass),
                failed: count(Status::Fail),
                errors: count(Status::Error),
            },
        };
        serde_json::to_string_pretty(&doc).expect("report serializes")
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            write!(f, "{} {}", c.status, c.name)?;
            if let Some(w) = &c.witness {
                write!(f, " witness={w:?}")?;
            }
            if let Some(d) = &c.detail {
                write!(f, " ({d})")?;
            }
            writeln!(f)?;
        }
        let passed = self.checks.iter().filter(|c| c.status == Status::Pass).count();
        writeln!(f, "{}: {}/{} checks passed", self.status(), passed, self.checks.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_folds_over_checks() {
        let mut r = Report::new();
        r.pass("a");
        assert!(r.is_pass());
        r.fail("b", vec![1, 2]);
        assert_eq!(r.status(), Status::Fail);
        assert_eq!(r.first_failure().unwrap().witness, Some(vec![1, 2]));
        r.error("c", "boom");
        assert_eq!(r.status(), Status::Error);
    }

    #[test]
    fn json_has_summary() {
        let mut r = Report::new();
        r.pass("x");
        r.fail("y", vec![0]);
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["status"], "fail");
        assert_eq!(v["summary"]["failed"], 1);
        assert_eq!(v["checks"][1]["witness"][0], 0);
    }
}
