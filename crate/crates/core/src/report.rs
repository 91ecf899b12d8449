//! Pass/fail reports emitted by the verification checks.

use serde::Serialize;

/// Outcome of one named check on one block. `detail` is empty on success and
/// holds the first counterexample found otherwise.
#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub charge: String,
    pub index_set: String,
    pub alpha: String,
    pub structure: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckReport {
    pub fn pass(check: &str, charge: &str, index_set: &str, alpha: &str, structure: &str) -> Self {
        CheckReport {
            check: check.to_string(),
            charge: charge.to_string(),
            index_set: index_set.to_string(),
            alpha: alpha.to_string(),
            structure: structure.to_string(),
            passed: true,
            detail: String::new(),
        }
    }

    pub fn fail(
        check: &str,
        charge: &str,
        index_set: &str,
        alpha: &str,
        structure: &str,
        detail: String,
    ) -> Self {
        CheckReport {
            check: check.to_string(),
            charge: charge.to_string(),
            index_set: index_set.to_string(),
            alpha: alpha.to_string(),
            structure: structure.to_string(),
            passed: false,
            detail,
        }
    }

    /// Render as a stable single line.
    pub fn line(&self) -> String {
        format!(
            "{} check={} charge={} index={} alpha={} structure={}{}",
            if self.passed { "PASS" } else { "FAIL" },
            self.check,
            self.charge,
            self.index_set,
            self.alpha,
            self.structure,
            if self.detail.is_empty() {
                String::new()
            } else {
                format!(" detail={}", self.detail)
            }
        )
    }
}

/// A sorted collection of check reports with an aggregate verdict.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub passed: bool,
    pub checks: Vec<CheckReport>,
}

impl SuiteReport {
    /// Aggregate, sorting deterministically so parallel producers agree.
    pub fn from_checks(mut checks: Vec<CheckReport>) -> Self {
        checks.sort_by(|a, b| {
            (&a.check, &a.charge, &a.index_set, &a.alpha, &a.structure).cmp(&(
                &b.check,
                &b.charge,
                &b.index_set,
                &b.alpha,
                &b.structure,
            ))
        });
        let passed = checks.iter().all(|c| c.passed);
        SuiteReport { passed, checks }
    }

    pub fn merge(suites: Vec<SuiteReport>) -> Self {
        Self::from_checks(suites.into_iter().flat_map(|s| s.checks).collect())
    }
}
