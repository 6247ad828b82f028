//! Suite reports and their canonical JSON form.

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::error::Result;
use crate::siegel::Tolerances;

/// Bumped whenever the JSON layout changes incompatibly.
pub const SCHEMA_VERSION: u32 = 1;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Inputs shared by all suites.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Parameters {
    pub genus: usize,
    /// Interleaved bitstring; `None` means the suite default (`b₁`).
    pub beta: Option<String>,
    pub p: Option<u32>,
    pub ell: Option<u8>,
    pub seed: u64,
    pub trials: usize,
    pub tolerances: Tolerances,
}

impl Default for Parameters {
    fn default() -> Self {
        Parameters { genus: 4, beta: None, p: None, ell: None, seed: 0, trials: 100, tolerances: Tolerances::default() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub verdict: Verdict,
    pub details: Value,
    /// Wall-clock time; left out of reports unless explicitly requested, so
    /// that repeated runs serialize identically.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, details: Value) -> Self {
        Check { name: name.into(), verdict: Verdict::from_bool(passed), details, elapsed_ms: None }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub schema_version: u32,
    pub suite: String,
    pub parameters: Parameters,
    pub checks: Vec<Check>,
    pub verdict: Verdict,
    pub tool_version: String,
    /// SHA-256 of the canonical JSON of the suite name and parameters.
    pub input_digest: String,
}

impl SuiteReport {
    pub fn new(suite: &str, parameters: Parameters, checks: Vec<Check>) -> Result<Self> {
        let verdict = Verdict::from_bool(checks.iter().all(Check::passed));
        let input_digest = input_digest(suite, &parameters)?;
        Ok(SuiteReport {
            schema_version: SCHEMA_VERSION,
            suite: suite.to_string(),
            parameters,
            checks,
            verdict,
            tool_version: TOOL_VERSION.to_string(),
            input_digest,
        })
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn to_json(&self) -> Result<String> {
        canonical_json(self)
    }

    /// One line per check, then the overall verdict.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let tag = if c.passed() { "PASS" } else { "FAIL" };
            out.push_str(&format!("{tag}  {}  {}\n", c.name, c.details));
        }
        let tag = if self.passed() { "PASS" } else { "FAIL" };
        out.push_str(&format!("{tag}  suite {} ({} checks)\n", self.suite, self.checks.len()));
        out
    }
}

/// Pretty JSON with object keys in sorted order.
pub fn canonical_json<T: Serialize>(value: &T) -> Result<String> {
    // serde_json's default map is ordered, so a round trip sorts every key
    let v = serde_json::to_value(value).map_err(|e| crate::Error::internal(e.to_string()))?;
    let mut s = serde_json::to_string_pretty(&v).map_err(|e| crate::Error::internal(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

pub fn input_digest(suite: &str, parameters: &Parameters) -> Result<String> {
    let text = canonical_json(&serde_json::json!({ "suite": suite, "parameters": parameters }))?;
    Ok(hex::encode(Sha256::digest(text.as_bytes())))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keys_are_sorted_and_digest_is_stable() {
        let r = SuiteReport::new("orbits", Parameters::default(), vec![Check::new("x", true, Value::Null)]).unwrap();
        let json = r.to_json().unwrap();
        let pos = |k: &str| json.find(&format!("\"{k}\"")).unwrap();
        assert!(pos("checks") < pos("input_digest") && pos("input_digest") < pos("parameters"));
        assert!(!json.contains("elapsed_ms"));
        assert_eq!(r.input_digest, input_digest("orbits", &Parameters::default()).unwrap());
        assert_eq!(r.input_digest.len(), 64);
        assert_ne!(r.input_digest, input_digest("cover", &Parameters::default()).unwrap());
    }

    #[test]
    fn verdict_is_conjunction() {
        let checks = vec![Check::new("a", true, Value::Null), Check::new("b", false, Value::Null)];
        assert!(!SuiteReport::new("s", Parameters::default(), checks).unwrap().passed());
    }
}
