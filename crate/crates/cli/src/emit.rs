//! Deterministic JSON and CSV rendering.
//!
//! JSON object keys are sorted and floats carry 17 significant digits, so identical
//! inputs give byte-identical output.

use std::fmt::Write;

use serde::Serialize;
use serde_json::Value;

/// 17 significant digits in scientific notation.
pub fn fmt_float(x: f64) -> String {
    format!("{x:.16e}")
}

fn write_value(out: &mut String, v: &Value, indent: usize) {
    let pad = "  ".repeat(indent + 1);
    let close = "  ".repeat(indent);
    match v {
        Value::Null => out.push_str("null"),
        Value::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
        Value::Number(n) => match (n.as_i64(), n.as_u64()) {
            (Some(i), _) => write!(out, "{i}").unwrap(),
            (None, Some(u)) => write!(out, "{u}").unwrap(),
            _ => out.push_str(&fmt_float(n.as_f64().expect("finite"))),
        },
        Value::String(s) => out.push_str(&serde_json::to_string(s).expect("string")),
        Value::Array(items) if items.is_empty() => out.push_str("[]"),
        Value::Array(items) => {
            out.push_str("[\n");
            for (i, item) in items.iter().enumerate() {
                out.push_str(&pad);
                write_value(out, item, indent + 1);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&close);
            out.push(']');
        }
        Value::Object(map) if map.is_empty() => out.push_str("{}"),
        Value::Object(map) => {
            let mut keys: Vec<&String> = map.keys().collect();
            keys.sort();
            out.push_str("{\n");
            for (i, k) in keys.iter().enumerate() {
                out.push_str(&pad);
                out.push_str(&serde_json::to_string(k).expect("key"));
                out.push_str(": ");
                write_value(out, &map[*k], indent + 1);
                out.push_str(if i + 1 < keys.len() { ",\n" } else { "\n" });
            }
            out.push_str(&close);
            out.push('}');
        }
    }
}

pub fn json_value(v: &Value) -> String {
    let mut out = String::new();
    write_value(&mut out, v, 0);
    out.push('\n');
    out
}

pub fn json<T: Serialize>(payload: &T) -> String {
    json_value(&serde_json::to_value(payload).expect("serializable payload"))
}

/// A rectangular table rendered as a JSON array of row objects or as CSV.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Value>>,
}

impl Table {
    pub fn new(columns: &[&str]) -> Self {
        Self { columns: columns.iter().map(|c| c.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Value>) {
        assert_eq!(row.len(), self.columns.len(), "row width");
        self.rows.push(row);
    }

    pub fn to_json(&self) -> String {
        let rows = self
            .rows
            .iter()
            .map(|r| Value::Object(self.columns.iter().cloned().zip(r.iter().cloned()).collect()))
            .collect();
        json_value(&Value::Array(rows))
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.columns).expect("in-memory write");
        for row in &self.rows {
            w.write_record(row.iter().map(cell)).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        Value::Number(n) if n.is_f64() => fmt_float(n.as_f64().expect("finite")),
        other => json_value(other).trim_end().to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn keys_sorted_and_floats_full_precision() {
        let v = json!({"b": 0.1, "a": [1, 0.25], "c": {"z": null, "y": true}});
        let s = json_value(&v);
        assert!(s.find("\"a\"").unwrap() < s.find("\"b\"").unwrap());
        assert!(s.contains("1.0000000000000001e-1"));
        assert!(s.contains("2.5000000000000000e-1"));
        let back: Value = serde_json::from_str(&s).unwrap();
        assert_eq!(back, v);
    }

    #[test]
    fn empty_table() {
        let t = Table::new(&["description", "pass"]);
        assert_eq!(t.to_json(), "[]\n");
        assert_eq!(t.to_csv(), "description,pass\n");
    }

    #[test]
    fn csv_rows() {
        let mut t = Table::new(&["name", "value"]);
        t.push(vec![json!("a, b"), json!(0.5)]);
        assert_eq!(t.to_csv(), "name,value\n\"a, b\",5.0000000000000000e-1\n");
    }
}
