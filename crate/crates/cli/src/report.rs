use serde_json::{json, Value};

pub const SCHEMA: &str = "ccdeg-report/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    Failed,
    Truncated,
    Invalid,
    Error,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Failed => "failed",
            Status::Truncated => "truncated",
            Status::Invalid => "invalid",
            Status::Error => "error",
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Error => 1,
            Status::Failed => 2,
            Status::Truncated => 3,
            Status::Invalid => 4,
        }
    }
}

pub struct Report {
    pub command: String,
    pub job: Value,
    pub status: Status,
    pub results: Value,
    pub provenance: Value,
}

impl Report {
    /// serde_json maps are ordered by key, so the output is stable.
    pub fn to_json(&self) -> Value {
        json!({
            "schema": SCHEMA,
            "command": self.command,
            "job": self.job,
            "status": self.status.as_str(),
            "results": self.results,
            "provenance": self.provenance,
        })
    }

    pub fn to_table(&self) -> String {
        let mut rows = Vec::new();
        flatten("", &self.results, &mut rows);
        let w = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0).max(6);
        let mut s = format!("{:w$}  {}\n{:w$}  {}\n", "command", self.command, "status", self.status.as_str());
        for (k, v) in rows {
            if v.contains('\n') {
                s.push_str(&format!("{k}:\n{v}\n"));
            } else {
                s.push_str(&format!("{k:w$}  {v}\n"));
            }
        }
        s
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::String(s) => Some(s.clone()),
        Value::Array(_) | Value::Object(_) => None,
        other => Some(other.to_string()),
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    let key = |k: &str| if prefix.is_empty() { k.to_string() } else { format!("{prefix}.{k}") };
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                flatten(&key(k), x, out);
            }
        }
        Value::Array(a) => {
            if let Some(items) = a.iter().map(scalar).collect::<Option<Vec<_>>>() {
                out.push((prefix.to_string(), items.join(", ")));
            } else {
                for (i, x) in a.iter().enumerate() {
                    flatten(&key(&i.to_string()), x, out);
                }
            }
        }
        other => out.push((prefix.to_string(), scalar(other).unwrap_or_default())),
    }
}
