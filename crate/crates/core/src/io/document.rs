//! Machine-readable result documents.
//!
//! Objects are `serde_json` maps, which keep keys sorted, so a document
//! prints byte-identically for identical inputs.

use serde_json::{json, Map, Value};

use crate::misrep::Objective;
use crate::model::{Committee, Election};

pub const SCHEMA: &str = "multiwinner-result/1";

#[derive(Debug, Clone, PartialEq)]
pub struct ResultDocument {
    operation: String,
    provenance: Map<String, Value>,
    input: Map<String, Value>,
    output: Map<String, Value>,
}

impl ResultDocument {
    pub fn new(operation: &str) -> Self {
        let mut provenance = Map::new();
        provenance.insert("version".into(), env!("CARGO_PKG_VERSION").into());
        provenance.insert("seed".into(), Value::Null);
        ResultDocument { operation: operation.into(), provenance, input: Map::new(), output: Map::new() }
    }

    /// Records the rule, ballot kind, aggregation and `α` that produced the
    /// result. Approval elections record `alpha` as null.
    pub fn objective(mut self, e: &Election, obj: &Objective) -> Self {
        self.provenance.insert("rule".into(), obj.rule.name().into());
        self.provenance.insert("ballots".into(), e.kind().name().into());
        self.provenance.insert("agg".into(), obj.effective_mode(e).name().into());
        let alpha = match (e.kind(), &obj.alpha) {
            (crate::model::BallotKind::Approval, _) => Value::Null,
            (_, None) => "borda".into(),
            (_, Some(a)) => json!(a.alpha()),
        };
        self.provenance.insert("alpha".into(), alpha);
        self
    }

    pub fn provenance(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.provenance.insert(key.into(), value.into());
        self
    }

    pub fn input(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.input.insert(key.into(), value.into());
        self
    }

    pub fn output(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.output.insert(key.into(), value.into());
        self
    }

    pub fn get_output(&self, key: &str) -> Option<&Value> {
        self.output.get(key)
    }

    pub fn to_value(&self) -> Value {
        json!({
            "schema": SCHEMA,
            "operation": self.operation,
            "provenance": self.provenance,
            "input": self.input,
            "output": self.output,
        })
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_value()).expect("documents hold plain values");
        s.push('\n');
        s
    }
}

/// Member labels in id order.
pub fn committee_value(e: &Election, w: &Committee) -> Value {
    Value::Array(w.members().iter().map(|&c| e.label(c).into()).collect())
}

/// Committees in lexicographic order of member ids.
pub fn committees_value(e: &Election, ws: &[Committee]) -> Value {
    let mut ws = ws.to_vec();
    ws.sort();
    Value::Array(ws.iter().map(|w| committee_value(e, w)).collect())
}
