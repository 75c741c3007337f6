use std::fmt::Write as _;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use serde_json::Value;

/// Outcome of one check. A failing report always carries a witness.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub claim: String,
    pub parameters: Value,
    pub passed: bool,
    pub witness: Option<Value>,
    /// Extra facts found while checking, such as discovered signs.
    pub evidence: Option<Value>,
    pub runtime_ms: u64,
}

impl VerificationReport {
    pub fn pass(claim: &str, parameters: Value, evidence: Option<Value>) -> Self {
        VerificationReport {
            claim: claim.to_string(),
            parameters,
            passed: true,
            witness: None,
            evidence,
            runtime_ms: 0,
        }
    }

    pub fn fail(claim: &str, parameters: Value, witness: Value) -> Self {
        VerificationReport {
            claim: claim.to_string(),
            parameters,
            passed: false,
            witness: Some(witness),
            evidence: None,
            runtime_ms: 0,
        }
    }

    /// Report for a check that could not run; the error becomes the witness.
    pub fn error(claim: &str, parameters: Value, err: &crate::Error) -> Self {
        Self::fail(claim, parameters, serde_json::json!({ "error": err.to_string() }))
    }

    pub fn with_runtime(mut self, elapsed: Duration) -> Self {
        self.runtime_ms = elapsed.as_millis() as u64;
        self
    }

    pub fn status(&self) -> &'static str {
        if self.passed {
            "pass"
        } else {
            "FAIL"
        }
    }
}

/// Runs `check` and stamps the report with its wall-clock time.
pub fn timed(check: impl FnOnce() -> VerificationReport) -> VerificationReport {
    let start = Instant::now();
    let report = check();
    report.with_runtime(start.elapsed())
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub profile: String,
    pub seed: u64,
    pub reports: Vec<VerificationReport>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.reports.iter().all(|r| r.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &VerificationReport> {
        self.reports.iter().filter(|r| !r.passed)
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).unwrap_or(Value::Null)
    }

    /// Aligned table: claim, status, runtime, then parameters or witness.
    pub fn to_text(&self) -> String {
        let width = self.reports.iter().map(|r| r.claim.len()).max().unwrap_or(5).max(5);
        let mut out = String::new();
        let _ = writeln!(out, "profile {}  seed {}", self.profile, self.seed);
        let _ = writeln!(out, "{:<width$}  {:<6}  {:>9}  detail", "claim", "status", "ms");
        for r in &self.reports {
            let detail = match &r.witness {
                Some(w) => format!("witness {w}"),
                None => r.parameters.to_string(),
            };
            let _ = writeln!(out, "{:<width$}  {:<6}  {:>9}  {}", r.claim, r.status(), r.runtime_ms, detail);
        }
        let failed = self.failures().count();
        let _ = writeln!(out, "{} checks, {} failed", self.reports.len(), failed);
        out
    }
}
