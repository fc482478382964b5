//! The report envelope. Text output is rendered from the same JSON value.

use std::fmt::Write as _;
use std::time::Duration;

use serde::Serialize;
use serde_json::{json, Map, Value};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, Serialize)]
pub struct Assertion {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub results: Value,
    pub assertions: Vec<Assertion>,
}

impl Report {
    pub fn new(command: &str, inputs: Value, results: impl Serialize) -> Self {
        Report {
            command: command.to_string(),
            inputs,
            results: serde_json::to_value(results).expect("results serialize"),
            assertions: Vec::new(),
        }
    }

    pub fn assert(mut self, name: impl Into<String>, passed: bool, detail: Option<String>) -> Self {
        self.assertions.push(Assertion {
            name: name.into(),
            passed,
            detail,
        });
        self
    }

    pub fn passed(&self) -> bool {
        self.assertions.iter().all(|a| a.passed)
    }

    /// Wall time is included only on request, so default output is reproducible.
    pub fn to_json(&self, wall_time: Option<Duration>) -> Value {
        let mut v = json!({
            "schema_version": SCHEMA_VERSION,
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "assertions": self.assertions,
            "passed": self.passed(),
        });
        if let Some(t) = wall_time {
            v["wall_time_ms"] = json!(t.as_secs_f64() * 1000.0);
        }
        v
    }
}

pub fn error_json(command: &str, kind: &str, message: &str) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "error": { "kind": kind, "message": message },
        "passed": false,
    })
}

/// Indented `key: value` rendering of a JSON value.
pub fn render_text(v: &Value) -> String {
    let mut out = String::new();
    match v {
        Value::Object(m) => render_object(m, 0, &mut out),
        other => {
            let _ = writeln!(out, "{}", scalar(other));
        }
    }
    out
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".to_string(),
        Value::Object(m) if m.is_empty() => "{}".to_string(),
        other => other.to_string(),
    }
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(a) => a.iter().all(|x| !x.is_object() && !x.is_array()),
        Value::Object(m) => m.is_empty(),
        _ => true,
    }
}

fn flat(v: &Value) -> String {
    match v {
        Value::Array(a) => {
            let parts: Vec<String> = a.iter().map(scalar).collect();
            format!("[{}]", parts.join(", "))
        }
        other => scalar(other),
    }
}

fn render_object(m: &Map<String, Value>, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    for (k, v) in m {
        if is_flat(v) {
            let _ = writeln!(out, "{pad}{k}: {}", flat(v));
            continue;
        }
        let _ = writeln!(out, "{pad}{k}:");
        match v {
            Value::Object(inner) => render_object(inner, depth + 1, out),
            Value::Array(items) => {
                for item in items {
                    match item {
                        Value::Object(inner) => {
                            let _ = writeln!(out, "{pad}  -");
                            render_object(inner, depth + 2, out);
                        }
                        other => {
                            let _ = writeln!(out, "{pad}  - {}", flat(other));
                        }
                    }
                }
            }
            _ => unreachable!(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_follows_json() {
        let r = Report::new("color", json!({"n": 3}), json!({"group": [3], "order": 3})).assert("nonempty", true, None);
        let text = render_text(&r.to_json(None));
        assert!(text.contains("schema_version: 1"));
        assert!(text.contains("  group: [3]"));
        assert!(text.contains("    name: nonempty"));
        assert!(!text.contains("wall_time"));
    }

    #[test]
    fn failure_propagates() {
        let r = Report::new("x", json!({}), json!({}))
            .assert("a", true, None)
            .assert("b", false, None);
        assert!(!r.passed());
        assert_eq!(r.to_json(None)["passed"], json!(false));
    }
}
