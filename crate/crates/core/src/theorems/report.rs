use std::time::Duration;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped { hypothesis: String },
}

/// Outcome of one check row.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckReport {
    pub check_id: String,
    pub instance: String,
    #[serde(flatten)]
    pub status: CheckStatus,
    /// Counterexamples for failures, evidence otherwise.
    pub witnesses: Vec<String>,
    /// Named tallies (objects checked, pairs compared, ...), in insertion order.
    pub stats: Vec<(String, usize)>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl CheckReport {
    pub fn new(check_id: &str, instance: &str) -> CheckReport {
        CheckReport {
            check_id: check_id.to_string(),
            instance: instance.to_string(),
            status: CheckStatus::Pass,
            witnesses: Vec::new(),
            stats: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn skipped(check_id: &str, instance: &str, hypothesis: impl Into<String>) -> CheckReport {
        let mut r = CheckReport::new(check_id, instance);
        r.status = CheckStatus::Skipped { hypothesis: hypothesis.into() };
        r
    }

    pub fn is_pass(&self) -> bool {
        self.status == CheckStatus::Pass
    }

    pub fn is_fail(&self) -> bool {
        self.status == CheckStatus::Fail
    }

    /// Records a counterexample and marks the report failed.
    pub fn fail(&mut self, witness: impl Into<String>) {
        self.status = CheckStatus::Fail;
        self.witnesses.push(witness.into());
    }

    /// Records evidence without changing the status.
    pub fn note(&mut self, evidence: impl Into<String>) {
        self.witnesses.push(evidence.into());
    }

    /// Fails with `witness` unless `ok`.
    pub fn expect(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        if !ok {
            self.fail(witness());
        }
    }

    pub fn count(&mut self, key: &str, by: usize) {
        match self.stats.iter_mut().find(|(k, _)| k == key) {
            Some((_, v)) => *v += by,
            None => self.stats.push((key.to_string(), by)),
        }
    }

    pub fn stat(&self, key: &str) -> Option<usize> {
        self.stats.iter().find(|(k, _)| k == key).map(|(_, v)| *v)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

impl Summary {
    pub fn of(reports: &[CheckReport]) -> Summary {
        let mut s = Summary::default();
        for r in reports {
            match r.status {
                CheckStatus::Pass => s.pass += 1,
                CheckStatus::Fail => s.fail += 1,
                CheckStatus::Skipped { .. } => s.skipped += 1,
            }
        }
        s
    }
}

/// Serialized result of a suite run. Timing is not part of the certificate.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Certificate {
    pub schema_version: u32,
    pub field_p: u32,
    pub algebra_spec_hash: String,
    pub n: usize,
    pub generators: Vec<String>,
    pub reports: Vec<CheckReport>,
    pub summary: Summary,
}

impl Certificate {
    pub fn new(spec_text: &str, field_p: u32, n: usize, generators: Vec<String>, reports: Vec<CheckReport>) -> Self {
        let summary = Summary::of(&reports);
        Certificate {
            schema_version: SCHEMA_VERSION,
            field_p,
            algebra_spec_hash: spec_hash(spec_text),
            n,
            generators,
            reports,
            summary,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }
}

/// Hex SHA-256 of an algebra spec.
pub fn spec_hash(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_serializes_flat() {
        let mut r = CheckReport::new("psi_suite", "x");
        r.count("objects", 2);
        r.count("objects", 1);
        assert_eq!(r.stat("objects"), Some(3));
        let j = serde_json::to_value(&r).unwrap();
        assert_eq!(j["status"], "pass");
        assert!(j.get("elapsed").is_none());
        let s = CheckReport::skipped("comparison", "x", "self-injective base");
        let j = serde_json::to_value(&s).unwrap();
        assert_eq!(j["status"], "skipped");
        assert_eq!(j["hypothesis"], "self-injective base");
    }

    #[test]
    fn fail_carries_witness() {
        let mut r = CheckReport::new("a", "b");
        r.expect(true, || unreachable!());
        assert!(r.is_pass());
        r.expect(false, || "w".into());
        assert!(r.is_fail());
        assert_eq!(r.witnesses, vec!["w".to_string()]);
        assert_eq!(Summary::of(&[r]), Summary { pass: 0, fail: 1, skipped: 0 });
    }

    #[test]
    fn hash_is_hex_sha256() {
        assert_eq!(spec_hash("").len(), 64);
        assert_eq!(spec_hash("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    }
}
