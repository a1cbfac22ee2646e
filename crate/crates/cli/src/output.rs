use std::fmt::Write as _;

use buchi_core::Integer;
use clap::ValueEnum;
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// Integers become JSON numbers when they fit in 64 bits.
pub fn int(v: &Integer) -> Value {
    match i64::try_from(v) {
        Ok(i) => Value::from(i),
        Err(_) => Value::String(v.to_string()),
    }
}

pub fn ints(v: &[Integer]) -> Value {
    Value::Array(v.iter().map(int).collect())
}

pub fn pairs(v: &[(Integer, Integer)]) -> Value {
    Value::Array(
        v.iter()
            .map(|(x, y)| Value::Array(vec![int(x), int(y)]))
            .collect(),
    )
}

/// A command's result: header fields, uniform rows and a text rendering.
pub struct Report {
    pub command: &'static str,
    pub meta: Map<String, Value>,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Value>>,
    /// Extra JSON-only sections, e.g. elimination traces.
    pub extra: Map<String, Value>,
    pub text: Vec<String>,
}

impl Report {
    pub fn new(command: &'static str, columns: Vec<&'static str>) -> Self {
        Report {
            command,
            meta: Map::new(),
            columns,
            rows: Vec::new(),
            extra: Map::new(),
            text: Vec::new(),
        }
    }

    pub fn render(&self, format: Format) -> Result<String, csv::Error> {
        Ok(match format {
            Format::Json => self.json(),
            Format::Csv => self.csv()?,
            Format::Text => {
                let mut s = String::new();
                for line in &self.text {
                    let _ = writeln!(s, "{line}");
                }
                s
            }
        })
    }

    fn json(&self) -> String {
        let mut top = Map::new();
        top.insert("schema".into(), Value::from(1));
        top.insert("command".into(), Value::from(self.command));
        top.extend(self.meta.clone());
        let rows = self
            .rows
            .iter()
            .map(|r| {
                Value::Object(
                    self.columns
                        .iter()
                        .map(|c| c.to_string())
                        .zip(r.iter().cloned())
                        .collect(),
                )
            })
            .collect();
        top.insert("rows".into(), Value::Array(rows));
        top.extend(self.extra.clone());
        let mut s = serde_json::to_string_pretty(&Value::Object(top))
            .expect("JSON values always serialize");
        s.push('\n');
        s
    }

    fn csv(&self) -> Result<String, csv::Error> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.columns)?;
        for r in &self.rows {
            w.write_record(r.iter().map(cell))?;
        }
        let bytes = w.into_inner().map_err(|e| e.into_error())?;
        Ok(String::from_utf8(bytes).expect("CSV of UTF-8 cells is UTF-8"))
    }
}

/// Arrays are space separated; nested arrays join their items with `:`.
pub fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        Value::Array(items) => items
            .iter()
            .map(|i| match i {
                Value::Array(inner) => inner.iter().map(cell).collect::<Vec<_>>().join(":"),
                other => cell(other),
            })
            .collect::<Vec<_>>()
            .join(" "),
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cells() {
        assert_eq!(
            cell(&serde_json::json!([[36, 35], [42, 30]])),
            "36:35 42:30"
        );
        assert_eq!(cell(&serde_json::json!([1, 12, 17])), "1 12 17");
        assert_eq!(cell(&Value::Null), "");
        assert_eq!(cell(&serde_json::json!(true)), "true");
    }

    #[test]
    fn big_integers_fall_back_to_strings() {
        let big: Integer = "123456789012345678901234567890".parse().unwrap();
        assert_eq!(
            int(&big),
            Value::String("123456789012345678901234567890".into())
        );
        assert_eq!(int(&Integer::from(-7)), Value::from(-7));
    }
}
