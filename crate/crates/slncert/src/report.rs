//! Structured pass/fail records and the line-delimited report format.
//!
//! Serialization is deterministic: field order is fixed and wall-clock
//! data is kept out of the byte stream so that identical (config, seed)
//! pairs produce byte-identical reports.

use std::fmt::Write as _;
use std::time::Duration;

/// One verified claim inside a check. `ok` plus a witness string that
/// makes the claim recomputable.
#[derive(Clone, Debug)]
pub struct Assertion {
    pub name: String,
    pub ok: bool,
    pub witness: String,
}

/// A named check tied to the mathematical claim it certifies.
#[derive(Clone, Debug)]
pub struct CheckRecord {
    /// Stable identifier, e.g. `leading_term_d_n3`.
    pub id: String,
    /// The claim being certified, as a formula, or `plumbing`.
    pub anchor: String,
    pub assertions: Vec<Assertion>,
    /// Wall-clock time; excluded from serialization.
    pub elapsed: Duration,
}

impl CheckRecord {
    pub fn new(id: impl Into<String>, anchor: impl Into<String>) -> Self {
        CheckRecord {
            id: id.into(),
            anchor: anchor.into(),
            assertions: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn assert_that(&mut self, name: impl Into<String>, ok: bool, witness: impl Into<String>) {
        self.assertions.push(Assertion {
            name: name.into(),
            ok,
            witness: witness.into(),
        });
    }

    pub fn passed(&self) -> bool {
        self.assertions.iter().all(|a| a.ok)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Assertion> {
        self.assertions.iter().filter(|a| !a.ok)
    }
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    /// Rendered echo of the configuration, one `key=value` per entry.
    pub config: Vec<(String, String)>,
    pub checks: Vec<CheckRecord>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed())
    }

    /// The deterministic line-delimited text form.
    ///
    /// Grammar (one record per line, fields separated by a single space):
    ///   report slncert 1
    ///   config <key>=<value> ...
    ///   check <id> status=<pass|fail> anchor=<quoted>
    ///   assert <check-id> <name> status=<pass|fail> witness=<quoted>
    ///   summary checks=<n> failed=<n>
    ///   result <PASS|FAIL>
    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str("report slncert 1\n");
        let cfg: Vec<String> = self
            .config
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        let _ = writeln!(out, "config {}", cfg.join(" "));
        for check in &self.checks {
            let _ = writeln!(
                out,
                "check {} status={} anchor={:?}",
                check.id,
                if check.passed() { "pass" } else { "fail" },
                check.anchor,
            );
            for a in &check.assertions {
                let _ = writeln!(
                    out,
                    "assert {} {} status={} witness={:?}",
                    check.id,
                    a.name,
                    if a.ok { "pass" } else { "fail" },
                    a.witness,
                );
            }
        }
        let failed = self.checks.iter().filter(|c| !c.passed()).count();
        let _ = writeln!(out, "summary checks={} failed={}", self.checks.len(), failed);
        let _ = writeln!(out, "result {}", if self.passed() { "PASS" } else { "FAIL" });
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn record_pass_fail() {
        let mut r = CheckRecord::new("demo", "x = x");
        r.assert_that("first", true, "1");
        assert!(r.passed());
        r.assert_that("second", false, "0");
        assert!(!r.passed());
        assert_eq!(r.failures().count(), 1);
    }

    #[test]
    fn render_is_stable_and_excludes_timing() {
        let mut r = CheckRecord::new("demo", "claim");
        r.assert_that("a", true, "w");
        let mut report = VerificationReport {
            config: vec![("n".into(), "2".into())],
            checks: vec![r],
        };
        let first = report.render();
        report.checks[0].elapsed = Duration::from_secs(5);
        assert_eq!(first, report.render());
        assert!(first.contains("result PASS"));
    }
}
