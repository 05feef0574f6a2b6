//! Report emitted by every subcommand.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

pub fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Verdict {
    pub name: String,
    /// The property checked, in words.
    pub anchor: String,
    pub holds: bool,
    /// Informational verdicts (e.g. "is this a tree?") do not affect the exit code.
    pub gate: bool,
    pub detail: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub input_digest: String,
    pub verdicts: Vec<Verdict>,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub output: Value,
    /// Wall-clock milliseconds per phase.
    pub timings: BTreeMap<String, f64>,
}

impl Report {
    pub fn new(command: &str, input_digest: String) -> Self {
        Report {
            command: command.to_string(),
            input_digest,
            verdicts: Vec::new(),
            output: Value::Null,
            timings: BTreeMap::new(),
        }
    }

    pub fn gate(&mut self, name: &str, anchor: &str, holds: bool, detail: impl Serialize) {
        self.push(name, anchor, holds, true, detail);
    }

    pub fn info(&mut self, name: &str, anchor: &str, holds: bool, detail: impl Serialize) {
        self.push(name, anchor, holds, false, detail);
    }

    fn push(&mut self, name: &str, anchor: &str, holds: bool, gate: bool, detail: impl Serialize) {
        self.verdicts.push(Verdict {
            name: name.to_string(),
            anchor: anchor.to_string(),
            holds,
            gate,
            detail: serde_json::to_value(detail).unwrap_or(Value::Null),
        });
    }

    pub fn verdict(&self, name: &str) -> Option<&Verdict> {
        self.verdicts.iter().find(|v| v.name == name)
    }

    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.holds || !v.gate)
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    /// The report without timings: identical across reruns on the same input.
    pub fn stable_json(&self) -> String {
        let mut v = serde_json::to_value(self).expect("reports serialise");
        v.as_object_mut().expect("object").remove("timings");
        serde_json::to_string(&v).expect("reports serialise")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialise")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gating() {
        let mut r = Report::new("check", digest(b""));
        r.info("tree", "tree shape", false, ());
        assert_eq!(r.exit_code(), 0);
        r.gate("gaps", "enough gaps", false, ());
        assert_eq!(r.exit_code(), 1);
        r.timings.insert("total".into(), 1.5);
        assert!(!r.stable_json().contains("timings"));
    }

    #[test]
    fn sha256_of_empty_input() {
        assert_eq!(digest(b""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    }
}
