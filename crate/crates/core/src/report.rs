//! Law-by-law verification reports.

use std::fmt;

use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawResult {
    pub law: String,
    pub depth: usize,
    pub status: Status,
    /// Number of instances actually checked.
    pub checked: usize,
    pub counterexample: Option<String>,
}

impl LawResult {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "law": self.law,
            "depth": self.depth,
            "status": if self.passed() { "pass" } else { "fail" },
            "checked": self.checked,
        });
        if let Some(c) = &self.counterexample {
            v["counterexample"] = json!(c);
        }
        v
    }
}

/// Accumulates the outcome of one law; keeps the first counterexample.
#[derive(Debug)]
pub struct Law {
    name: String,
    depth: usize,
    checked: usize,
    counterexample: Option<String>,
}

impl Law {
    pub fn new(name: &str, depth: usize) -> Self {
        Law {
            name: name.to_string(),
            depth,
            checked: 0,
            counterexample: None,
        }
    }

    /// Records one checked instance; `witness` is only rendered on failure.
    pub fn check(&mut self, ok: bool, witness: impl FnOnce() -> String) -> bool {
        self.checked += 1;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(witness());
        }
        ok
    }

    pub fn fail(&mut self, witness: String) {
        self.check(false, || witness);
    }

    pub fn failed(&self) -> bool {
        self.counterexample.is_some()
    }

    pub fn finish(self) -> LawResult {
        LawResult {
            status: if self.counterexample.is_some() {
                Status::Fail
            } else {
                Status::Pass
            },
            law: self.name,
            depth: self.depth,
            checked: self.checked,
            counterexample: self.counterexample,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub results: Vec<LawResult>,
}

impl CheckReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, law: Law) {
        self.results.push(law.finish());
    }

    pub fn all_pass(&self) -> bool {
        self.results.iter().all(LawResult::passed)
    }

    pub fn failed_laws(&self) -> Vec<&str> {
        self.results
            .iter()
            .filter(|r| !r.passed())
            .map(|r| r.law.as_str())
            .collect()
    }

    pub fn law(&self, name: &str) -> Option<&LawResult> {
        self.results.iter().find(|r| r.law == name)
    }

    pub fn passes(&self, name: &str) -> bool {
        self.law(name).is_some_and(LawResult::passed)
    }

    /// Appends another report, prefixing its law names with `scope/`.
    pub fn extend_scoped(&mut self, scope: &str, other: CheckReport) {
        for mut r in other.results {
            r.law = format!("{scope}/{}", r.law);
            self.results.push(r);
        }
    }

    /// One JSON record per law, newline separated.
    pub fn to_json_lines(&self) -> String {
        self.results
            .iter()
            .map(|r| r.to_json().to_string() + "\n")
            .collect()
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.results {
            write!(
                f,
                "{:<5} {} (depth {}, {} checked)",
                if r.passed() { "PASS" } else { "FAIL" },
                r.law,
                r.depth,
                r.checked
            )?;
            if let Some(c) = &r.counterexample {
                write!(f, ": {c}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
