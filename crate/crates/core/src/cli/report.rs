//! Result records and their text, JSON and CSV forms.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde_json::{Map, Value};

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Ok,
    Finding,
    Fail,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Finding => "finding",
            Status::Fail => "fail",
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Kind {
    Value,
    Eigenvalue,
    Residual,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Value => "value",
            Kind::Eigenvalue => "eigenvalue",
            Kind::Residual => "residual",
        }
    }
}

/// One checked item.
#[derive(Clone, Debug, PartialEq)]
pub struct Record {
    pub check: String,
    pub item: String,
    pub kind: Kind,
    pub value: String,
    pub expected: Option<String>,
    pub note: Option<String>,
    pub status: Status,
}

impl Record {
    pub fn new(
        check: &str,
        item: impl Into<String>,
        kind: Kind,
        value: impl Into<String>,
        status: Status,
    ) -> Self {
        Record {
            check: check.to_string(),
            item: item.into(),
            kind,
            value: value.into(),
            expected: None,
            note: None,
            status,
        }
    }

    pub fn value(check: &str, item: impl Into<String>, value: impl Into<String>, ok: bool) -> Self {
        Record::new(check, item, Kind::Value, value, pass(ok))
    }

    pub fn residual(check: &str, item: impl Into<String>, residual: impl ToString) -> Self {
        let r = residual.to_string();
        let ok = r == "0";
        Record::new(check, item, Kind::Residual, r, pass(ok))
    }

    pub fn expect(mut self, e: impl Into<String>) -> Self {
        self.expected = Some(e.into());
        self
    }

    pub fn note(mut self, n: impl Into<String>) -> Self {
        self.note = Some(n.into());
        self
    }

    pub fn finding(mut self) -> Self {
        if self.status == Status::Ok {
            self.status = Status::Finding;
        }
        self
    }

    fn to_json(&self) -> Value {
        let mut m = Map::new();
        m.insert("check".into(), Value::from(self.check.clone()));
        m.insert("item".into(), Value::from(self.item.clone()));
        m.insert(self.kind.as_str().into(), Value::from(self.value.clone()));
        if let Some(e) = &self.expected {
            m.insert("expected".into(), Value::from(e.clone()));
        }
        if let Some(n) = &self.note {
            m.insert("note".into(), Value::from(n.clone()));
        }
        m.insert("status".into(), Value::from(self.status.as_str()));
        Value::Object(m)
    }
}

pub fn pass(ok: bool) -> Status {
    if ok {
        Status::Ok
    } else {
        Status::Fail
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Overall {
    Ok,
    Findings,
    Error,
}

impl Overall {
    pub fn as_str(self) -> &'static str {
        match self {
            Overall::Ok => "ok",
            Overall::Findings => "findings",
            Overall::Error => "error",
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Overall::Ok | Overall::Findings => 0,
            Overall::Error => 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub command: String,
    pub inputs: BTreeMap<String, String>,
    pub results: Vec<Record>,
    /// Set when the command itself failed.
    pub error: Option<String>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            inputs: BTreeMap::new(),
            results: Vec::new(),
            error: None,
        }
    }

    pub fn input(&mut self, k: &str, v: impl ToString) {
        self.inputs.insert(k.to_string(), v.to_string());
    }

    pub fn status(&self) -> Overall {
        if self.error.is_some() || self.results.iter().any(|r| r.status == Status::Fail) {
            Overall::Error
        } else if self.results.iter().any(|r| r.status == Status::Finding) {
            Overall::Findings
        } else {
            Overall::Ok
        }
    }

    pub fn count(&self, s: Status) -> usize {
        self.results.iter().filter(|r| r.status == s).count()
    }

    pub fn to_json(&self) -> String {
        let mut m = Map::new();
        m.insert("command".into(), Value::from(self.command.clone()));
        let inputs: Map<String, Value> = self
            .inputs
            .iter()
            .map(|(k, v)| (k.clone(), Value::from(v.clone())))
            .collect();
        m.insert("inputs".into(), Value::Object(inputs));
        m.insert(
            "results".into(),
            Value::Array(self.results.iter().map(Record::to_json).collect()),
        );
        m.insert("status".into(), Value::from(self.status().as_str()));
        if let Some(e) = &self.error {
            m.insert("error".into(), Value::from(e.clone()));
        }
        m.insert("version".into(), Value::from(env!("CARGO_PKG_VERSION")));
        let mut s = serde_json::to_string_pretty(&Value::Object(m)).expect("json");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for r in &self.results {
            let _ = write!(
                s,
                "[{:<7}] {:<14} {}: {} = {}",
                r.status.as_str(),
                r.check,
                r.item,
                r.kind.as_str(),
                r.value
            );
            if let Some(e) = &r.expected {
                let _ = write!(s, " (expected {e})");
            }
            if let Some(n) = &r.note {
                let _ = write!(s, " [{n}]");
            }
            s.push('\n');
        }
        if let Some(e) = &self.error {
            let _ = writeln!(s, "error: {e}");
        }
        let _ = writeln!(
            s,
            "{}: {} ({} ok, {} findings, {} failed)",
            self.command,
            self.status().as_str(),
            self.count(Status::Ok),
            self.count(Status::Finding),
            self.count(Status::Fail)
        );
        s
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record([
            "check", "item", "kind", "value", "expected", "note", "status",
        ])
        .expect("csv");
        for r in &self.results {
            w.write_record([
                r.check.as_str(),
                r.item.as_str(),
                r.kind.as_str(),
                r.value.as_str(),
                r.expected.as_deref().unwrap_or(""),
                r.note.as_deref().unwrap_or(""),
                r.status.as_str(),
            ])
            .expect("csv");
        }
        if let Some(e) = &self.error {
            w.write_record(["error", "", "value", e.as_str(), "", "", "fail"])
                .expect("csv");
        }
        String::from_utf8(w.into_inner().expect("csv")).expect("utf8")
    }
}
