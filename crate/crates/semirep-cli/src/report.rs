//! Report documents. Every invocation emits exactly one JSON object with
//! stable field names: `schema`, `command`, `parameters`, `verdict`,
//! `witnesses`, `counters`, `elapsed_ms`. Witnesses are typed objects and
//! use vertex labels when the graph carries them.

use semirep::graph::{Graph, ShortcutWitness};
use serde_json::{json, Map, Value};
use std::time::Duration;

pub const SCHEMA_ID: &str = "semirep-report/1";

pub struct Report {
    command: &'static str,
    parameters: Value,
    verdict: String,
    witnesses: Vec<Value>,
    counters: Map<String, Value>,
    extra: Map<String, Value>,
}

impl Report {
    pub fn new(command: &'static str, parameters: Value, verdict: impl Into<String>) -> Self {
        Report {
            command,
            parameters,
            verdict: verdict.into(),
            witnesses: Vec::new(),
            counters: Map::new(),
            extra: Map::new(),
        }
    }

    pub fn set_verdict(&mut self, verdict: impl Into<String>) {
        self.verdict = verdict.into();
    }

    pub fn counter(&mut self, name: &str, value: u64) {
        self.counters.insert(name.to_string(), json!(value));
    }

    pub fn field(&mut self, name: &str, value: Value) {
        self.extra.insert(name.to_string(), value);
    }

    pub fn witness(&mut self, w: Value) {
        self.witnesses.push(w);
    }

    pub fn render(&self, elapsed: Duration) -> Value {
        let mut doc = Map::new();
        doc.insert("schema".into(), json!(SCHEMA_ID));
        doc.insert("command".into(), json!(self.command));
        doc.insert("parameters".into(), self.parameters.clone());
        doc.insert("verdict".into(), json!(self.verdict));
        doc.insert("witnesses".into(), Value::Array(self.witnesses.clone()));
        doc.insert("counters".into(), Value::Object(self.counters.clone()));
        doc.insert("elapsed_ms".into(), json!(elapsed.as_millis() as u64));
        for (k, v) in &self.extra {
            doc.insert(k.clone(), v.clone());
        }
        Value::Object(doc)
    }
}

pub fn labels_of(g: &Graph, vertices: &[usize]) -> Vec<String> {
    vertices.iter().map(|&v| g.display_vertex(v)).collect()
}

pub fn shortcut_witness(g: &Graph, w: &ShortcutWitness) -> Value {
    json!({
        "type": "shortcut",
        "path": labels_of(g, &w.path),
        "missing_edge": labels_of(g, &[w.missing_edge.0, w.missing_edge.1]),
    })
}

pub fn cycle_witness(g: &Graph, cycle: &[usize], kind: &str) -> Value {
    json!({
        "type": kind,
        "cycle": labels_of(g, cycle),
    })
}

pub fn certificate_witness(g: &Graph, arcs: &[(usize, usize)]) -> Value {
    let rendered: Vec<[String; 2]> = arcs
        .iter()
        .map(|&(t, h)| [g.display_vertex(t), g.display_vertex(h)])
        .collect();
    json!({
        "type": "certificate",
        "arcs": rendered,
    })
}
