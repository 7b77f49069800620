use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{Map, Value};
use sha2::{Digest, Sha256};

/// Arguments and input files of a run, with a digest over both.
#[derive(Serialize, Debug, Clone)]
pub struct Inputs {
    pub args: Map<String, Value>,
    pub files: Map<String, Value>,
    pub sha256: String,
}

impl Inputs {
    pub fn new(args: Map<String, Value>, files: &[(String, String)]) -> Self {
        let mut hasher = Sha256::new();
        hasher.update(Value::Object(args.clone()).to_string().as_bytes());
        let mut digests = Map::new();
        for (path, text) in files {
            let file_digest = hex::encode(Sha256::digest(text.as_bytes()));
            hasher.update(file_digest.as_bytes());
            digests.insert(path.clone(), Value::String(file_digest));
        }
        Inputs {
            args,
            files: digests,
            sha256: hex::encode(hasher.finalize()),
        }
    }
}

#[derive(Serialize, Debug, Clone)]
pub struct Report {
    pub command: String,
    pub version: &'static str,
    pub inputs: Inputs,
    pub seed: u64,
    pub results: Vec<Value>,
    pub pass: bool,
}

impl Report {
    pub fn new(command: &str, inputs: Inputs, seed: u64, results: Vec<Value>, pass: bool) -> Self {
        Report {
            command: command.to_string(),
            version: env!("CARGO_PKG_VERSION"),
            inputs,
            seed,
            results,
            pass,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// Line-oriented rendering of the same content as the JSON form.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "command: {}", self.command).unwrap();
        writeln!(out, "seed: {}", self.seed).unwrap();
        writeln!(out, "inputs: {}", self.inputs.sha256).unwrap();
        for (i, result) in self.results.iter().enumerate() {
            writeln!(out, "result {i}:").unwrap();
            render(&mut out, result, 1);
        }
        writeln!(out, "pass: {}", self.pass).unwrap();
        out
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(scalar).collect();
            format!("[{}]", parts.join(", "))
        }
        other => other.to_string(),
    }
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Object(_) => false,
        Value::Array(items) => items.iter().all(|x| !x.is_object() && !x.is_array()),
        _ => true,
    }
}

fn render(out: &mut String, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(map) => {
            for (key, value) in map {
                if is_flat(value) {
                    writeln!(out, "{pad}{key}: {}", scalar(value)).unwrap();
                } else {
                    writeln!(out, "{pad}{key}:").unwrap();
                    render(out, value, depth + 1);
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                if is_flat(item) {
                    writeln!(out, "{pad}{}", scalar(item)).unwrap();
                } else {
                    writeln!(out, "{pad}-").unwrap();
                    render(out, item, depth + 1);
                }
            }
        }
        other => writeln!(out, "{pad}{}", scalar(other)).unwrap(),
    }
}
