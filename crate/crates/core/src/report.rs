//! Verification reports with a stable digest of their inputs.

use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn from_bool(ok: bool) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub checks: Vec<Check>,
    pub overall: Status,
    pub inputs_digest: String,
}

impl Default for Report {
    fn default() -> Self {
        Report {
            checks: Vec::new(),
            overall: Status::Pass,
            inputs_digest: digest(&[]),
        }
    }
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_inputs(inputs: &[Value]) -> Self {
        Report {
            inputs_digest: digest(inputs),
            ..Self::default()
        }
    }

    pub fn set_inputs(&mut self, inputs: &[Value]) {
        self.inputs_digest = digest(inputs);
    }

    pub fn check(&mut self, id: impl Into<String>, ok: bool, detail: impl Into<String>) -> bool {
        self.checks.push(Check {
            id: id.into(),
            status: Status::from_bool(ok),
            detail: detail.into(),
        });
        if !ok {
            self.overall = Status::Fail;
        }
        ok
    }

    pub fn passed(&self) -> bool {
        self.overall == Status::Pass
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    /// Appends the checks of `other` with `prefix` on their ids.
    pub fn merge(&mut self, prefix: &str, other: Report) {
        for c in other.checks {
            self.check(format!("{prefix}{}", c.id), c.status == Status::Pass, c.detail);
        }
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

/// Hex SHA-256 of the compact JSON of `inputs`; object keys are sorted, so
/// the digest does not depend on construction order.
pub fn digest(inputs: &[Value]) -> String {
    let text = serde_json::to_string(inputs).expect("json values serialize");
    hex::encode(Sha256::digest(text.as_bytes()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn overall_is_conjunction() {
        let mut r = Report::new();
        assert!(r.passed());
        r.check("a", true, "");
        assert!(r.passed());
        r.check("b", false, "broken");
        assert!(!r.passed());
        assert_eq!(r.failures().count(), 1);
    }

    #[test]
    fn digest_ignores_key_order() {
        let a = json!({"x": 1, "y": [1, 2]});
        let b: Value = serde_json::from_str(r#"{"y":[1,2],"x":1}"#).unwrap();
        assert_eq!(digest(&[a]), digest(&[b]));
        assert_ne!(digest(&[json!(1)]), digest(&[json!(2)]));
    }

    #[test]
    fn serializes_lowercase_status() {
        let mut r = Report::new();
        r.check("a", true, "");
        let v = r.to_json();
        assert_eq!(v["overall"], "pass");
        assert_eq!(v["checks"][0]["status"], "pass");
    }
}
