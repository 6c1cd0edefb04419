//! Reports and their two renderings.

use serde::Serialize;
use serde_json::{Map, Value};

use crate::job::JobSpec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    Mismatch,
    Error,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Mismatch => 2,
            Status::Error => 1,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub job: JobSpec,
    pub values: Map<String, Value>,
    pub primary: Value,
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<Value>,
    pub status: Status,
}

/// Whitespace and quoting are ignored when comparing; () counts as [].
pub fn canonical(v: &Value) -> String {
    let s = match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    };
    s.chars()
        .filter(|c| !c.is_whitespace() && *c != '"')
        .map(|c| match c {
            '(' => '[',
            ')' => ']',
            c => c,
        })
        .collect()
}

impl Report {
    pub fn new(command: &str, job: JobSpec) -> Self {
        Report {
            command: command.to_string(),
            job,
            values: Map::new(),
            primary: Value::Null,
            notes: Vec::new(),
            expected: None,
            status: Status::Ok,
        }
    }

    pub fn set(&mut self, key: &str, v: impl Serialize) {
        self.values.insert(key.to_string(), serde_json::to_value(v).expect("serializable"));
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    /// Compares the primary value with the expectation, if any.
    pub fn settle(&mut self) {
        if let Some(e) = &self.job.options.expect {
            self.expected = Some(e.clone());
            if canonical(e) != canonical(&self.primary) {
                self.status = Status::Mismatch;
            }
        }
    }

    pub fn machine(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn text(&self) -> String {
        let mut out = String::new();
        let mut rows: Vec<(String, String)> = vec![("command".into(), self.command.clone())];
        if let Some(i) = &self.job.input {
            rows.push(("input".into(), serde_json::to_string(i).unwrap()));
        }
        for (k, v) in &self.values {
            if k == "rows" {
                continue;
            }
            rows.push((k.clone(), flat(v)));
        }
        rows.push(("result".into(), flat(&self.primary)));
        if let Some(e) = &self.expected {
            rows.push(("expected".into(), flat(e)));
        }
        rows.push(("status".into(), format!("{:?}", self.status).to_lowercase()));
        let w = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        for (k, v) in rows {
            out.push_str(&format!("{k:<w$}  {v}\n"));
        }
        if let Some(Value::Array(table)) = self.values.get("rows") {
            out.push('\n');
            out.push_str(&table_text(table));
        }
        for n in &self.notes {
            out.push_str(&format!("note: {n}\n"));
        }
        out
    }
}

fn flat(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

/// Aligned table from a list of flat objects sharing their keys.
fn table_text(rows: &[Value]) -> String {
    let Some(Value::Object(first)) = rows.first() else { return String::new() };
    let keys: Vec<&String> = first.keys().collect();
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| keys.iter().map(|k| r.get(k.as_str()).map(flat).unwrap_or_default()).collect())
        .collect();
    let widths: Vec<usize> = keys
        .iter()
        .enumerate()
        .map(|(i, k)| cells.iter().map(|c| c[i].chars().count()).max().unwrap_or(0).max(k.len()))
        .collect();
    let mut out = String::new();
    let line = |vals: Vec<String>, out: &mut String| {
        let parts: Vec<String> = vals.iter().zip(&widths).map(|(v, w)| format!("{v:<w$}")).collect();
        out.push_str(parts.join("  ").trim_end());
        out.push('\n');
    };
    line(keys.iter().map(|k| k.to_string()).collect(), &mut out);
    for c in cells {
        line(c, &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_forms() {
        assert_eq!(canonical(&Value::String("(2, 3, 5)".into())), canonical(&serde_json::json!([2, 3, 5])));
        assert_eq!(canonical(&serde_json::json!(14)), canonical(&Value::String("14".into())));
        assert_ne!(canonical(&serde_json::json!(13)), "14");
    }
}
