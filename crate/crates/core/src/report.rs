use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub input: String,
    pub expected: String,
    pub got: String,
}

/// Outcome of one verification suite. Passing means `failures` is empty.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub suite: String,
    #[serde(rename = "n")]
    pub level: u32,
    pub checked: u64,
    pub failures: Vec<Failure>,
}

impl VerifyReport {
    pub fn new(suite: impl Into<String>, level: u32) -> Self {
        VerifyReport {
            suite: suite.into(),
            level,
            checked: 0,
            failures: Vec::new(),
        }
    }

    /// Count one check; record a failure when `ok` is false.
    pub fn check(
        &mut self,
        ok: bool,
        input: impl FnOnce() -> String,
        expected: impl FnOnce() -> String,
        got: impl FnOnce() -> String,
    ) {
        self.checked += 1;
        if !ok {
            self.failures.push(Failure {
                input: input(),
                expected: expected(),
                got: got(),
            });
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn merge(&mut self, other: VerifyReport) {
        self.checked += other.checked;
        self.failures.extend(other.failures);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_field_names() {
        let mut r = VerifyReport::new("oracle", 3);
        r.check(true, String::new, String::new, String::new);
        r.check(false, || "1/2".into(), || "a".into(), || "b".into());
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(
            v,
            serde_json::json!({
                "suite": "oracle", "n": 3, "checked": 2,
                "failures": [{"input": "1/2", "expected": "a", "got": "b"}]
            })
        );
        assert!(!r.passed());
    }
}
