//! JSON run reports with sorted keys.

use std::collections::BTreeMap;

use num_complex::Complex64;
use serde_json::{Map, Value};

use crate::error::{CliError, Result};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Everything a command computed, echoed with its inputs and tolerances.
#[derive(Debug, Clone, PartialEq)]
pub struct RunReport {
    pub command: String,
    pub inputs: BTreeMap<String, Value>,
    pub results: BTreeMap<String, Value>,
    pub tolerances: BTreeMap<String, Value>,
    pub version: String,
}

impl RunReport {
    pub fn new(command: &str) -> Self {
        Self {
            command: command.to_owned(),
            inputs: BTreeMap::new(),
            results: BTreeMap::new(),
            tolerances: BTreeMap::new(),
            version: VERSION.to_owned(),
        }
    }

    pub fn input(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.inputs.insert(key.to_owned(), value.into());
        self
    }

    pub fn result(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.results.insert(key.to_owned(), value.into());
        self
    }

    pub fn tolerance(&mut self, key: &str, value: f64) -> &mut Self {
        self.tolerances.insert(key.to_owned(), value.into());
        self
    }

    pub fn to_value(&self) -> Value {
        let mut top = BTreeMap::new();
        top.insert("command", Value::from(self.command.clone()));
        top.insert("inputs", object(&self.inputs));
        top.insert("results", object(&self.results));
        top.insert("tolerances", object(&self.tolerances));
        top.insert("version", Value::from(self.version.clone()));
        Value::Object(top.into_iter().map(|(k, v)| (k.to_owned(), v)).collect())
    }

    /// Pretty JSON with keys sorted at every level, newline-terminated.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&sort_keys(&self.to_value())).expect("JSON values always serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(text).map_err(|e| CliError::Report(e.to_string()))?;
        let top = v.as_object().ok_or_else(|| CliError::Report("top level is not an object".into()))?;
        let string = |key: &str| {
            top.get(key)
                .and_then(Value::as_str)
                .map(str::to_owned)
                .ok_or_else(|| CliError::Report(format!("missing string `{key}`")))
        };
        let map = |key: &str| -> Result<BTreeMap<String, Value>> {
            let m = top
                .get(key)
                .and_then(Value::as_object)
                .ok_or_else(|| CliError::Report(format!("missing object `{key}`")))?;
            Ok(m.iter().map(|(k, v)| (k.clone(), v.clone())).collect())
        };
        Ok(Self {
            command: string("command")?,
            inputs: map("inputs")?,
            results: map("results")?,
            tolerances: map("tolerances")?,
            version: string("version")?,
        })
    }
}

fn object(m: &BTreeMap<String, Value>) -> Value {
    Value::Object(m.iter().map(|(k, v)| (k.clone(), v.clone())).collect())
}

/// Rebuild every object with keys inserted in sorted order.
fn sort_keys(v: &Value) -> Value {
    match v {
        Value::Object(m) => {
            let sorted: BTreeMap<&String, Value> = m.iter().map(|(k, v)| (k, sort_keys(v))).collect();
            Value::Object(sorted.into_iter().map(|(k, v)| (k.clone(), v)).collect::<Map<_, _>>())
        }
        Value::Array(a) => Value::Array(a.iter().map(sort_keys).collect()),
        other => other.clone(),
    }
}

/// `[re, im]`.
pub fn complex(z: Complex64) -> Value {
    Value::from(vec![z.re, z.im])
}

pub fn complex_list(zs: &[Complex64]) -> Value {
    Value::Array(zs.iter().map(|&z| complex(z)).collect())
}

/// Object from `(key, value)` pairs.
pub fn obj<I: IntoIterator<Item = (&'static str, Value)>>(pairs: I) -> Value {
    let m: BTreeMap<&str, Value> = pairs.into_iter().collect();
    Value::Object(m.into_iter().map(|(k, v)| (k.to_owned(), v)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> RunReport {
        let mut r = RunReport::new("radius");
        r.input("n", 3).input("alpha", complex(Complex64::new(0.5, -0.1)));
        r.result("zeta", 1.0).result("alpha_first", obj([("b", 2.into()), ("a", Value::Null)]));
        r.tolerance("agreement", 1e-9);
        r
    }

    #[test]
    fn keys_are_sorted() {
        let json = sample().to_json();
        let pos = |k: &str| json.find(k).unwrap();
        assert!(pos("\"command\"") < pos("\"inputs\""));
        assert!(pos("\"inputs\"") < pos("\"results\""));
        assert!(pos("\"results\"") < pos("\"tolerances\""));
        assert!(pos("\"tolerances\"") < pos("\"version\""));
        assert!(pos("\"alpha_first\"") < pos("\"zeta\""));
        assert!(pos("\"a\"") < pos("\"b\""));
    }

    #[test]
    fn round_trip_is_byte_identical() {
        let json = sample().to_json();
        let back = RunReport::from_json(&json).unwrap();
        assert_eq!(back, sample());
        assert_eq!(back.to_json(), json);
    }

    #[test]
    fn non_finite_becomes_null() {
        let mut r = RunReport::new("x");
        r.result("v", f64::NAN);
        assert!(r.to_json().contains("\"v\": null"));
    }

    #[test]
    fn malformed_reports_rejected() {
        assert!(RunReport::from_json("[]").is_err());
        assert!(RunReport::from_json("{\"command\": 1}").is_err());
    }
}
