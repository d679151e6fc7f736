//! Output records and their canonical JSON / CSV encodings.
//!
//! JSON keys are sorted and every float is written with 17 significant
//! digits, so parsing a record and writing it again reproduces it byte for
//! byte.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    BoundViolation,
    NoConvergence,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::BoundViolation => "bound_violation",
            Status::NoConvergence => "no_convergence",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Input {
    Int(u64),
    Real(f64),
    Text(String),
    Flag(bool),
}

impl From<usize> for Input {
    fn from(v: usize) -> Self {
        Input::Int(v as u64)
    }
}

impl From<f64> for Input {
    fn from(v: f64) -> Self {
        Input::Real(v)
    }
}

impl From<&str> for Input {
    fn from(v: &str) -> Self {
        Input::Text(v.to_string())
    }
}

impl From<bool> for Input {
    fn from(v: bool) -> Self {
        Input::Flag(v)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct OutputRecord {
    pub command: String,
    pub inputs: BTreeMap<String, Input>,
    pub outputs: BTreeMap<String, f64>,
    pub status: Status,
}

impl OutputRecord {
    pub fn new(command: &str) -> Self {
        Self { command: command.to_string(), inputs: BTreeMap::new(), outputs: BTreeMap::new(), status: Status::Ok }
    }

    pub fn input(&mut self, key: &str, value: impl Into<Input>) -> &mut Self {
        self.inputs.insert(key.to_string(), value.into());
        self
    }

    pub fn output(&mut self, key: &str, value: f64) -> &mut Self {
        self.outputs.insert(key.to_string(), value);
        self
    }

    pub fn to_value(&self) -> Value {
        let inputs = self
            .inputs
            .iter()
            .map(|(k, v)| {
                let v = match v {
                    Input::Int(i) => Value::from(*i),
                    Input::Real(x) => real_value(*x),
                    Input::Text(s) => Value::from(s.as_str()),
                    Input::Flag(b) => Value::from(*b),
                };
                (k.clone(), v)
            })
            .collect();
        let outputs = self.outputs.iter().map(|(k, &v)| (k.clone(), real_value(v))).collect();
        let mut map = serde_json::Map::new();
        map.insert("command".into(), Value::from(self.command.as_str()));
        map.insert("inputs".into(), Value::Object(inputs));
        map.insert("outputs".into(), Value::Object(outputs));
        map.insert("status".into(), Value::from(self.status.as_str()));
        Value::Object(map)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => to_canonical_json(&self.to_value()),
            Format::Csv => self.to_csv(),
        }
    }

    /// Header row of `command,status,<inputs>,<outputs>` and one value row.
    fn to_csv(&self) -> String {
        let mut header = vec!["command".to_string(), "status".to_string()];
        let mut row = vec![self.command.clone(), self.status.as_str().to_string()];
        for (k, v) in &self.inputs {
            header.push(k.clone());
            row.push(match v {
                Input::Int(i) => i.to_string(),
                Input::Real(x) => format_real(*x),
                Input::Text(s) => s.clone(),
                Input::Flag(b) => b.to_string(),
            });
        }
        for (k, &v) in &self.outputs {
            header.push(k.clone());
            row.push(format_real(v));
        }
        format!("{}\n{}\n", header.join(","), row.join(","))
    }
}

fn real_value(x: f64) -> Value {
    serde_json::Number::from_f64(x).map(Value::Number).unwrap_or(Value::Null)
}

/// 17 significant digits; empty for non-finite values.
pub fn format_real(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        String::new()
    }
}

/// Compact JSON with sorted keys, integers as integers and every other number
/// as `{:.16e}`.
pub fn to_canonical_json(v: &Value) -> String {
    let mut out = String::new();
    write_value(&mut out, v);
    out
}

fn write_value(out: &mut String, v: &Value) {
    match v {
        Value::Null => out.push_str("null"),
        Value::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
        Value::Number(n) => {
            if let Some(i) = n.as_u64() {
                let _ = write!(out, "{i}");
            } else if let Some(i) = n.as_i64() {
                let _ = write!(out, "{i}");
            } else {
                out.push_str(&format_real(n.as_f64().unwrap_or(f64::NAN)));
            }
        }
        Value::String(s) => out.push_str(&Value::String(s.clone()).to_string()),
        Value::Array(items) => {
            out.push('[');
            for (i, item) in items.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                write_value(out, item);
            }
            out.push(']');
        }
        Value::Object(map) => {
            let mut keys: Vec<&String> = map.keys().collect();
            keys.sort();
            out.push('{');
            for (i, k) in keys.into_iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                out.push_str(&Value::String(k.clone()).to_string());
                out.push(':');
                write_value(out, &map[k]);
            }
            out.push('}');
        }
    }
}
