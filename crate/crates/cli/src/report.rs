use crate::config::{RunConfig, Scenario};
use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Comparison {
    #[serde(rename = "<=")]
    AtMost,
    #[serde(rename = "<")]
    Below,
    #[serde(rename = ">")]
    Above,
    #[serde(rename = "==")]
    Equal,
}

/// One in-scenario check: `value <comparison> limit`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Assertion {
    pub name: String,
    pub value: f64,
    pub comparison: Comparison,
    pub limit: f64,
    pub passed: bool,
}

impl Assertion {
    pub fn new(name: impl Into<String>, value: f64, comparison: Comparison, limit: f64) -> Self {
        let passed = match comparison {
            Comparison::AtMost => value <= limit,
            Comparison::Below => value < limit,
            Comparison::Above => value > limit,
            Comparison::Equal => value == limit,
        };
        Self {
            name: name.into(),
            value,
            comparison,
            limit,
            passed,
        }
    }

    pub fn at_most(name: impl Into<String>, value: f64, limit: f64) -> Self {
        Self::new(name, value, Comparison::AtMost, limit)
    }

    /// `|value − target| ≤ tolerance`, reported as the deviation.
    pub fn near(name: impl Into<String>, value: f64, target: f64, tolerance: f64) -> Self {
        Self::at_most(name, (value - target).abs(), tolerance)
    }

    pub fn holds(name: impl Into<String>, ok: bool) -> Self {
        Self::new(name, if ok { 1.0 } else { 0.0 }, Comparison::Equal, 1.0)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub scenario: Scenario,
    pub seed: u64,
    pub parameters: RunConfig,
    pub assertions: Vec<Assertion>,
    pub passed: bool,
    pub results: Value,
    pub files: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub unix_time: Option<u64>,
}

impl Report {
    pub fn failures(&self) -> Vec<&Assertion> {
        self.assertions.iter().filter(|a| !a.passed).collect()
    }
}

/// What a scenario hands back before the report is assembled.
#[derive(Debug, Default)]
pub struct Outcome {
    pub assertions: Vec<Assertion>,
    pub results: serde_json::Map<String, Value>,
}

impl Outcome {
    pub fn check(&mut self, a: Assertion) {
        self.assertions.push(a);
    }

    pub fn put(&mut self, key: &str, value: impl Serialize) {
        let v = serde_json::to_value(value).unwrap_or(Value::Null);
        self.results.insert(key.to_string(), v);
    }
}
