//! Machine-readable check reports: one record per verified claim, with a
//! deterministic fingerprint of the inputs. Reports serialize to JSON with
//! stable field order so identical runs produce identical bytes.

use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skip,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckItem {
    pub id: String,
    /// The mathematical claim being verified, stated directly.
    pub claim: String,
    pub status: CheckStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<serde_json::Value>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub suite: String,
    pub version: String,
    pub fingerprint: String,
    pub checks: Vec<CheckItem>,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

impl CheckReport {
    pub fn new(suite: &str, params: &BTreeMap<String, String>) -> Self {
        CheckReport {
            suite: suite.to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            fingerprint: fingerprint(suite, params),
            checks: Vec::new(),
            passed: 0,
            failed: 0,
            skipped: 0,
        }
    }

    pub fn push(&mut self, id: &str, claim: &str, ok: bool) {
        self.push_with_witness(id, claim, ok, None);
    }

    pub fn push_with_witness(
        &mut self,
        id: &str,
        claim: &str,
        ok: bool,
        witness: Option<serde_json::Value>,
    ) {
        let status = if ok { CheckStatus::Pass } else { CheckStatus::Fail };
        match status {
            CheckStatus::Pass => self.passed += 1,
            CheckStatus::Fail => self.failed += 1,
            CheckStatus::Skip => self.skipped += 1,
        }
        self.checks.push(CheckItem { id: id.to_string(), claim: claim.to_string(), status, witness });
    }

    pub fn skip(&mut self, id: &str, claim: &str) {
        self.skipped += 1;
        self.checks.push(CheckItem {
            id: id.to_string(),
            claim: claim.to_string(),
            status: CheckStatus::Skip,
            witness: None,
        });
    }

    pub fn all_pass(&self) -> bool {
        self.failed == 0
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.passed += other.passed;
        self.failed += other.failed;
        self.skipped += other.skipped;
        self.checks.extend(other.checks);
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_markdown(&self) -> String {
        let mut out = format!("# suite: {}\n\n", self.suite);
        out.push_str("| id | claim | status |\n|---|---|---|\n");
        for c in &self.checks {
            let status = match c.status {
                CheckStatus::Pass => "pass",
                CheckStatus::Fail => "FAIL",
                CheckStatus::Skip => "skip",
            };
            out.push_str(&format!("| {} | {} | {} |\n", c.id, c.claim, status));
        }
        out.push_str(&format!(
            "\n{} passed, {} failed, {} skipped\n",
            self.passed, self.failed, self.skipped
        ));
        out
    }
}

/// Stable hex fingerprint of the suite name and parameters (FNV-1a over the
/// canonical key=value rendering).
pub fn fingerprint(suite: &str, params: &BTreeMap<String, String>) -> String {
    let mut input = suite.to_string();
    for (k, v) in params {
        input.push_str(&format!(";{k}={v}"));
    }
    let mut hash: u64 = 0xcbf29ce484222325;
    for b in input.as_bytes() {
        hash ^= u64::from(*b);
        hash = hash.wrapping_mul(0x100000001b3);
    }
    format!("{hash:016x}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_reports() {
        let params: BTreeMap<String, String> =
            [("n".to_string(), "3".to_string())].into_iter().collect();
        let mut r1 = CheckReport::new("demo", &params);
        r1.push("a", "claim", true);
        let mut r2 = CheckReport::new("demo", &params);
        r2.push("a", "claim", true);
        assert_eq!(r1.to_json(), r2.to_json());
        assert!(r1.all_pass());
        r1.push("b", "bad claim", false);
        assert!(!r1.all_pass());
    }
}
