use std::collections::BTreeMap;

use cayley_core::{GroupTable, Permutation};
use serde::Serialize;
use serde_json::{json, Value};

/// Machine-readable result of one command. Keys serialise in sorted order
/// because `serde_json::Map` is a `BTreeMap` without `preserve_order`.
#[derive(Debug, Serialize)]
pub struct CommandResult {
    pub command: String,
    pub params: BTreeMap<String, Value>,
    pub result: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Value>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub counts: BTreeMap<String, usize>,
    pub runtime_ms: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    /// A mathematical statement failed: a lemma violation, a non-group
    /// table, or a falsified stability claim.
    Violation,
}

impl Status {
    pub fn exit_code(self) -> u8 {
        match self {
            Status::Ok => 0,
            Status::Violation => 1,
        }
    }
}

/// What a command hands back to `main`.
pub struct Output {
    pub result: CommandResult,
    pub text: String,
    pub status: Status,
}

impl Output {
    pub fn new(command: &str, result: Value, text: String) -> Self {
        Self {
            result: CommandResult {
                command: command.to_string(),
                params: BTreeMap::new(),
                result,
                witnesses: None,
                counts: BTreeMap::new(),
                runtime_ms: 0,
            },
            text,
            status: Status::Ok,
        }
    }

    pub fn param(mut self, key: &str, value: impl Serialize) -> Self {
        self.result.params.insert(key.to_string(), json!(value));
        self
    }

    pub fn witnesses(mut self, value: Value) -> Self {
        self.result.witnesses = Some(value);
        self
    }

    pub fn count(mut self, key: &str, value: usize) -> Self {
        self.result.counts.insert(key.to_string(), value);
        self
    }

    pub fn status(mut self, status: Status) -> Self {
        self.status = status;
        self
    }
}

pub fn to_json(result: &CommandResult) -> String {
    // Round-trip through Value so every nested map is key-sorted.
    let value = serde_json::to_value(result).expect("command results serialise");
    let mut s = serde_json::to_string_pretty(&value).expect("values serialise");
    s.push('\n');
    s
}

pub fn rows(t: &GroupTable) -> Value {
    json!(t.rows().collect::<Vec<_>>())
}

/// Witness entries for a permutation: the image array under `key` and its
/// cycle notation under `<key>_cycles`.
pub fn perm_entries(map: &mut serde_json::Map<String, Value>, key: &str, f: &Permutation) {
    map.insert(key.to_string(), json!(f.images()));
    map.insert(format!("{key}_cycles"), json!(f.to_string()));
}

pub fn perm_witness(key: &str, f: &Permutation) -> Value {
    let mut map = serde_json::Map::new();
    perm_entries(&mut map, key, f);
    Value::Object(map)
}
