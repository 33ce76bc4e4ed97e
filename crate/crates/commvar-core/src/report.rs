//! Deterministic claim reports shared by the CLI and integration checks.
//! Serialization is byte-stable for a fixed seed: params are kept in a
//! sorted map and timing is opt-in.

use serde::Serialize;
use serde_json::Value;
use std::collections::BTreeMap;

pub const SCHEMA: &str = "commvar-report/1";

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

#[derive(Clone, Debug, Serialize)]
pub struct Claim {
    pub name: String,
    /// statement being checked, in mathematical terms
    pub source: String,
    pub expected: Value,
    pub computed: Value,
    pub status: Status,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub command: String,
    pub params: BTreeMap<String, Value>,
    pub seed: u64,
    pub claims: Vec<Claim>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl Report {
    pub fn new(command: impl Into<String>, seed: u64) -> Self {
        Report {
            schema: SCHEMA,
            command: command.into(),
            params: BTreeMap::new(),
            seed,
            claims: Vec::new(),
            elapsed_ms: None,
        }
    }

    pub fn param(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    /// Pass iff expected == computed exactly.
    pub fn claim(
        &mut self,
        name: &str,
        source: &str,
        expected: impl Into<Value>,
        computed: impl Into<Value>,
    ) -> &mut Self {
        let expected = expected.into();
        let computed = computed.into();
        let status = if expected == computed { Status::Pass } else { Status::Fail };
        self.claims.push(Claim {
            name: name.to_string(),
            source: source.to_string(),
            expected,
            computed,
            status,
        });
        self
    }

    pub fn claim_inconclusive(
        &mut self,
        name: &str,
        source: &str,
        computed: impl Into<Value>,
    ) -> &mut Self {
        self.claims.push(Claim {
            name: name.to_string(),
            source: source.to_string(),
            expected: Value::Null,
            computed: computed.into(),
            status: Status::Inconclusive,
        });
        self
    }

    pub fn all_pass(&self) -> bool {
        self.claims.iter().all(|c| c.status == Status::Pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("{} (seed {})\n", self.command, self.seed));
        if !self.params.is_empty() {
            let params: Vec<String> =
                self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            out.push_str(&format!("params: {}\n", params.join(" ")));
        }
        let name_w = self.claims.iter().map(|c| c.name.len()).max().unwrap_or(4).max(4);
        for c in &self.claims {
            let status = match c.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Inconclusive => "inconclusive",
            };
            out.push_str(&format!(
                "{:<12} {:<name_w$} expected={} computed={}\n",
                status, c.name, c.expected, c.computed
            ));
        }
        let verdict = if self.all_pass() { "all claims pass" } else { "some claims failed" };
        out.push_str(&format!("{verdict}\n"));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pass_fail_logic() {
        let mut r = Report::new("demo check", 0);
        r.claim("a", "one equals one", 1, 1);
        assert!(r.all_pass());
        r.claim("b", "one equals two", 1, 2);
        assert!(!r.all_pass());
        assert_eq!(r.claims[1].status, Status::Fail);
        r.claim_inconclusive("c", "unknown", Value::Null);
        assert_eq!(r.claims[2].status, Status::Inconclusive);
    }

    #[test]
    fn json_is_stable_and_versioned() {
        let mut r = Report::new("demo", 7);
        r.param("n", 2).param("m", 3);
        r.claim("dim", "dimension statement", 6, 6);
        let a = r.to_json();
        let b = r.to_json();
        assert_eq!(a, b);
        assert!(a.contains("\"schema\": \"commvar-report/1\""));
        assert!(!a.contains("elapsed_ms"));
        r.elapsed_ms = Some(5);
        assert!(r.to_json().contains("elapsed_ms"));
    }

    #[test]
    fn text_rendering() {
        let mut r = Report::new("demo", 0);
        r.claim("count", "seven things", 7, 7);
        let t = r.to_text();
        assert!(t.contains("pass"));
        assert!(t.contains("all claims pass"));
    }
}
