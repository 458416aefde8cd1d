//! The single structured document each invocation produces, and its text rendering.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use linsyz::oracle::BettiTable;
use linsyz::FieldSpec;
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

/// Report sections; `serde_json::Map` keeps keys sorted, so serialization is
/// deterministic apart from `timings`.
#[derive(Default)]
pub struct Report {
    sections: Map<String, Value>,
    verdicts: Map<String, Value>,
}

pub fn digest(bytes: &[u8]) -> String {
    format!("sha256:{}", hex::encode(Sha256::digest(bytes)))
}

/// 0-based generator or facet indices to the 1-based form used in output.
pub fn one_based(v: &[usize]) -> Vec<usize> {
    v.iter().map(|k| k + 1).collect()
}

impl Report {
    pub fn new(command: &str, args: Value) -> Self {
        let mut r = Report::default();
        r.set("command", json!({ "name": command, "args": args }));
        r
    }

    pub fn set(&mut self, key: &str, value: Value) {
        self.sections.insert(key.to_string(), value);
    }

    pub fn verdict(&mut self, name: &str, value: Value) {
        self.verdicts.insert(name.to_string(), value);
    }

    pub fn finish(mut self, elapsed_ms: f64) -> Value {
        if !self.verdicts.is_empty() {
            let verdicts = std::mem::take(&mut self.verdicts);
            self.sections.insert("verdicts".into(), Value::Object(verdicts));
        }
        self.sections.insert("timings".into(), json!({ "elapsed_ms": elapsed_ms }));
        Value::Object(self.sections)
    }
}

pub fn betti_json(table: &BettiTable) -> Value {
    let entries: Vec<Value> = table
        .entries
        .iter()
        .map(|(&(i, j), &b)| json!({ "i": i, "j": j, "beta": b }))
        .collect();
    json!({ "field": table.field.to_string(), "entries": entries, "projdim": table.proj_dim() })
}

fn betti_from_json(v: &Value) -> Option<BettiTable> {
    let field: FieldSpec = v.get("field")?.as_str()?.parse().ok()?;
    let mut entries = BTreeMap::new();
    for e in v.get("entries")?.as_array()? {
        let get = |k: &str| e.get(k).and_then(Value::as_u64).map(|x| x as usize);
        entries.insert((get("i")?, get("j")?), get("beta")?);
    }
    Some(BettiTable { field, entries })
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(a) if a.iter().all(|x| !x.is_object() && !x.is_array()) => {
            let parts: Vec<String> = a.iter().filter_map(scalar).collect();
            Some(format!("[{}]", parts.join(", ")))
        }
        Value::Array(a) if a.iter().all(|x| x.as_array().is_some_and(|y| y.iter().all(Value::is_number))) => {
            let parts: Vec<String> = a.iter().filter_map(scalar).collect();
            Some(parts.join(" "))
        }
        _ => None,
    }
}

fn write_value(out: &mut String, key: &str, v: &Value, indent: usize) {
    let pad = "  ".repeat(indent);
    if key == "betti" {
        if let Some(table) = betti_from_json(v) {
            let _ = writeln!(out, "{pad}betti ({}):", table.field);
            for line in table.render().lines() {
                let _ = writeln!(out, "{pad}  {line}");
            }
            return;
        }
    }
    if let Some(s) = scalar(v) {
        let _ = writeln!(out, "{pad}{key}: {s}");
        return;
    }
    let _ = writeln!(out, "{pad}{key}:");
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                write_value(out, k, x, indent + 1);
            }
        }
        Value::Array(a) => {
            for (k, x) in a.iter().enumerate() {
                let label = x.get("index").and_then(Value::as_u64).map_or(k as u64 + 1, |i| i);
                write_value(out, &format!("[{label}]"), x, indent + 1);
            }
        }
        _ => unreachable!("scalars handled above"),
    }
}

const HEAD: [&str; 2] = ["command", "input"];
const TAIL: [&str; 2] = ["verdicts", "timings"];

/// Human-readable rendering derived from the structured report: command and
/// input first, verdicts and timings last. Suite listings show only the
/// instances with violations.
pub fn render_text(report: &Value) -> String {
    let mut out = String::new();
    let Value::Object(m) = report else {
        return out;
    };
    let middle = m.keys().filter(|k| !HEAD.contains(&k.as_str()) && !TAIL.contains(&k.as_str()));
    for k in HEAD.iter().map(|s| s.to_string()).chain(middle.cloned()).chain(TAIL.iter().map(|s| s.to_string())) {
        let Some(v) = m.get(&k) else { continue };
        if k == "suite" {
            write_value(&mut out, &k, &failing_only(v), 0);
        } else {
            write_value(&mut out, &k, v, 0);
        }
    }
    out
}

fn failing_only(suite: &Value) -> Value {
    let mut s = suite.clone();
    if let Some(Value::Array(instances)) = s.get_mut("instances") {
        instances.retain(|i| i.get("violations").and_then(Value::as_array).is_some_and(|v| !v.is_empty()));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keys_are_sorted_and_timings_last_in_text() {
        let mut r = Report::new("graph", json!({ "file": "x" }));
        r.set("input", json!({ "n": 3 }));
        r.verdict("b", json!({ "holds": true }));
        r.verdict("a", json!({ "holds": false }));
        let v = r.finish(1.5);
        let s = serde_json::to_string(&v).unwrap();
        assert!(s.find("\"command\"").unwrap() < s.find("\"input\"").unwrap());
        assert!(s.find("\"a\"").unwrap() < s.find("\"b\"").unwrap());
        let text = render_text(&v);
        assert!(text.trim_end().ends_with("elapsed_ms: 1.5"));
    }

    #[test]
    fn betti_round_trip() {
        let mut entries = BTreeMap::new();
        entries.insert((0, 2), 4);
        entries.insert((1, 3), 4);
        entries.insert((2, 4), 1);
        let t = BettiTable { field: FieldSpec::Rationals, entries };
        assert_eq!(betti_from_json(&betti_json(&t)).unwrap(), t);
    }

    #[test]
    fn digests() {
        assert_eq!(
            digest(b""),
            "sha256:e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855"
        );
        assert_eq!(one_based(&[0, 2]), vec![1, 3]);
    }
}
