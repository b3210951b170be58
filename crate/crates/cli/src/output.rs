//! Text and JSON rendering of command results.

use std::fmt::Display;

use dmod_core::polyarith::BFunction;
use dmod_core::text::render_poly;
use dmod_core::{Algebra, OpPoly};
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::Format;

#[derive(Clone, Debug, Serialize)]
pub struct CaseResult {
    pub name: String,
    pub passed: bool,
    pub skipped: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    command: String,
    ring: Vec<String>,
    generators: Vec<String>,
    /// `(numerator, denominator, multiplicity)`, ascending by value.
    roots: Vec<(String, String, u32)>,
    values: Vec<(String, String)>,
    cases: Vec<CaseResult>,
    text: Vec<String>,
}

impl Report {
    pub fn new(command: &str, ring: &[String]) -> Self {
        Report { command: command.into(), ring: ring.to_vec(), ..Default::default() }
    }

    pub fn generators(&mut self, gens: &[OpPoly], alg: &Algebra) {
        for g in gens {
            let s = render_poly(g, alg);
            self.text.push(s.clone());
            self.generators.push(s);
        }
    }

    pub fn value(&mut self, key: &str, v: impl Display) {
        let v = v.to_string();
        self.text.push(format!("{key}: {v}"));
        self.values.push((key.into(), v));
    }

    pub fn bfunction(&mut self, b: &BFunction) {
        let mut parts = Vec::new();
        for (r, m) in &b.roots {
            parts.push(format!("({r}, {m})"));
            self.roots.push((r.numer().to_string(), r.denom().to_string(), *m));
        }
        self.text.push(format!("roots: {}", parts.join(" ")));
        if !b.remainder.is_one() {
            self.value("remainder", &b.remainder);
        }
    }

    pub fn case(&mut self, c: CaseResult) {
        let status = if c.skipped {
            "SKIP"
        } else if c.passed {
            "PASS"
        } else {
            "FAIL"
        };
        self.text.push(format!("{status} {:<32} {}", c.name, c.detail));
        self.cases.push(c);
    }

    pub fn failed(&self) -> bool {
        self.cases.iter().any(|c| !c.passed && !c.skipped)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text.iter().map(|l| format!("{l}\n")).collect(),
            Format::Json => {
                let roots: Vec<Value> = self.roots.iter().map(|(n, d, m)| json!([num(n), num(d), m])).collect();
                let mut obj = Map::new();
                obj.insert("command".into(), json!(self.command));
                obj.insert("ring".into(), json!(self.ring));
                obj.insert("generators".into(), json!(self.generators));
                obj.insert("roots".into(), Value::Array(roots));
                if !self.values.is_empty() {
                    let vals: Map<String, Value> = self.values.iter().map(|(k, v)| (k.clone(), json!(v))).collect();
                    obj.insert("values".into(), Value::Object(vals));
                }
                if !self.cases.is_empty() {
                    obj.insert("cases".into(), json!(self.cases));
                }
                format!("{}\n", Value::Object(obj))
            }
        }
    }
}

/// Integers that fit are emitted as JSON numbers, larger ones as strings.
fn num(s: &str) -> Value {
    s.parse::<i64>().map(Value::from).unwrap_or_else(|_| Value::from(s))
}

pub fn error(format: Format, command: &str, reason: &str, msg: &str) {
    match format {
        Format::Text => eprintln!("error [{reason}]: {msg}"),
        Format::Json => eprintln!("{}", json!({ "command": command, "error": reason, "message": msg })),
    }
}
