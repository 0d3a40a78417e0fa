//! Structured pass/fail records with witnesses.
//!
//! Serialized as line-oriented text with a stable key order:
//!
//! ```text
//! report: <task id>
//! param: <key> = <value>          (one line per parameter, insertion order)
//! check: <name> | <status>        (plus `| <witness>` when present)
//! status: <aggregate>
//! ```
//!
//! Timing is tracked in memory only and never serialized, so identical runs
//! produce byte-identical files.

use std::fmt::Write as _;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    Budget,
}

impl std::fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CheckStatus::Pass => write!(f, "pass"),
            CheckStatus::Fail => write!(f, "fail"),
            CheckStatus::Budget => write!(f, "budget-exceeded"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub status: CheckStatus,
    pub witness: Option<String>,
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub task: String,
    pub params: Vec<(String, String)>,
    pub checks: Vec<Check>,
    /// informational only; excluded from serialization
    pub timing_ms: Option<u128>,
}

impl VerificationReport {
    pub fn new(task: impl Into<String>) -> Self {
        VerificationReport { task: task.into(), params: Vec::new(), checks: Vec::new(), timing_ms: None }
    }

    pub fn param(mut self, key: impl Into<String>, value: impl ToString) -> Self {
        self.params.push((key.into(), value.to_string()));
        self
    }

    pub fn pass(&mut self, name: impl Into<String>) {
        self.checks.push(Check { name: name.into(), status: CheckStatus::Pass, witness: None });
    }

    pub fn fail(&mut self, name: impl Into<String>, witness: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            status: CheckStatus::Fail,
            witness: Some(witness.into()),
        });
    }

    pub fn budget(&mut self, name: impl Into<String>, witness: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            status: CheckStatus::Budget,
            witness: Some(witness.into()),
        });
    }

    pub fn note(&mut self, name: impl Into<String>, witness: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            status: CheckStatus::Pass,
            witness: Some(witness.into()),
        });
    }

    /// Record a named boolean check.
    pub fn check(&mut self, name: impl Into<String>, ok: bool, witness: impl Into<String>) {
        if ok {
            self.pass(name);
        } else {
            self.fail(name, witness);
        }
    }

    pub fn status(&self) -> CheckStatus {
        let mut st = CheckStatus::Pass;
        for c in &self.checks {
            match c.status {
                CheckStatus::Fail => return CheckStatus::Fail,
                CheckStatus::Budget => st = CheckStatus::Budget,
                CheckStatus::Pass => {}
            }
        }
        st
    }

    pub fn is_pass(&self) -> bool {
        self.status() == CheckStatus::Pass
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        writeln!(s, "report: {}", self.task).unwrap();
        for (k, v) in &self.params {
            writeln!(s, "param: {k} = {v}").unwrap();
        }
        for c in &self.checks {
            match &c.witness {
                Some(w) => writeln!(s, "check: {} | {} | {}", c.name, c.status, w).unwrap(),
                None => writeln!(s, "check: {} | {}", c.name, c.status).unwrap(),
            }
        }
        writeln!(s, "status: {}", self.status()).unwrap();
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn aggregate_and_render() {
        let mut r = VerificationReport::new("demo").param("n", 3);
        r.pass("a");
        assert!(r.is_pass());
        r.fail("b", "witness text");
        assert_eq!(r.status(), CheckStatus::Fail);
        let text = r.render();
        assert!(text.starts_with("report: demo\nparam: n = 3\n"));
        assert!(text.ends_with("status: fail\n"));
        assert!(text.contains("check: b | fail | witness text"));
    }
}
