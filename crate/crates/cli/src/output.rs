//! Record stream shared by every subcommand and its three renderings.
//!
//! JSON is the canonical form. CSV and pretty tables are projections of the same
//! records: arrays print as `(a,b,c)`, nulls as `-`.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{Map, Value};

use crate::error::{CliError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Table {
    pub name: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Value>>,
}

impl Table {
    pub fn new(name: &str, columns: &[&str]) -> Self {
        Table {
            name: name.to_string(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Value>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub command: String,
    pub tables: Vec<Table>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            tables: Vec::new(),
        }
    }

    pub fn table(&self, name: &str) -> Option<&Table> {
        self.tables.iter().find(|t| t.name == name)
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Json => self.to_json(),
            Format::Csv => self.to_csv(),
            Format::Pretty => Ok(self.to_pretty()),
        }
    }

    pub fn to_json_value(&self) -> Value {
        let tables: Vec<Value> = self
            .tables
            .iter()
            .map(|t| {
                let rows: Vec<Value> = t
                    .rows
                    .iter()
                    .map(|row| {
                        let mut obj = Map::new();
                        for (col, v) in t.columns.iter().zip(row) {
                            obj.insert(col.clone(), v.clone());
                        }
                        Value::Object(obj)
                    })
                    .collect();
                let mut obj = Map::new();
                obj.insert("name".into(), Value::String(t.name.clone()));
                obj.insert("rows".into(), Value::Array(rows));
                Value::Object(obj)
            })
            .collect();
        let mut obj = Map::new();
        obj.insert("command".into(), Value::String(self.command.clone()));
        obj.insert("tables".into(), Value::Array(tables));
        Value::Object(obj)
    }

    fn to_json(&self) -> Result<String> {
        let mut s = serde_json::to_string_pretty(&self.to_json_value())
            .map_err(|e| CliError::Output(e.to_string()))?;
        s.push('\n');
        Ok(s)
    }

    fn to_csv(&self) -> Result<String> {
        let mut out = String::new();
        for (k, t) in self.tables.iter().enumerate() {
            if k > 0 {
                out.push('\n');
            }
            out.push_str(&format!("# {}\n", t.name));
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(&t.columns).map_err(|e| CliError::Output(e.to_string()))?;
            for row in &t.rows {
                w.write_record(row.iter().map(cell_text))
                    .map_err(|e| CliError::Output(e.to_string()))?;
            }
            let bytes = w.into_inner().map_err(|e| CliError::Output(e.to_string()))?;
            out.push_str(&String::from_utf8(bytes).map_err(|e| CliError::Output(e.to_string()))?);
        }
        Ok(out)
    }

    fn to_pretty(&self) -> String {
        let mut out = String::new();
        for (k, t) in self.tables.iter().enumerate() {
            if k > 0 {
                out.push('\n');
            }
            let cells: Vec<Vec<String>> = t.rows.iter().map(|r| r.iter().map(cell_text).collect()).collect();
            let mut widths: Vec<usize> = t.columns.iter().map(|c| c.chars().count()).collect();
            for row in &cells {
                for (w, c) in widths.iter_mut().zip(row) {
                    *w = (*w).max(c.chars().count());
                }
            }
            let plural = if t.rows.len() == 1 { "" } else { "s" };
            let _ = writeln!(out, "{} ({} row{plural})", t.name, t.rows.len());
            let line = |out: &mut String, items: &[String]| {
                let mut s = String::new();
                for (i, (item, w)) in items.iter().zip(&widths).enumerate() {
                    if i > 0 {
                        s.push_str("  ");
                    }
                    let pad = w - item.chars().count();
                    s.push_str(item);
                    s.extend(std::iter::repeat(' ').take(pad));
                }
                out.push_str(s.trim_end());
                out.push('\n');
            };
            line(&mut out, &t.columns);
            let rule: Vec<String> = widths.iter().map(|&w| "-".repeat(w)).collect();
            line(&mut out, &rule);
            for row in &cells {
                line(&mut out, row);
            }
        }
        out
    }
}

/// Text form of a cell for CSV and pretty output.
pub fn cell_text(v: &Value) -> String {
    match v {
        Value::Null => "-".into(),
        Value::String(s) => s.clone(),
        Value::Array(items) => {
            let inner: Vec<String> = items.iter().map(cell_text).collect();
            format!("({})", inner.join(","))
        }
        other => other.to_string(),
    }
}

pub fn tuple(values: &[i64]) -> Value {
    Value::Array(values.iter().map(|&x| Value::from(x)).collect())
}

pub fn parts(values: &[u32]) -> Value {
    Value::Array(values.iter().map(|&x| Value::from(x)).collect())
}

/// Integers that fit in an `i64` become JSON numbers, larger ones decimal strings.
pub fn bigint(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => Value::from(v),
        None => Value::String(x.to_string()),
    }
}

pub fn text(s: impl Into<String>) -> Value {
    Value::String(s.into())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Report {
        let mut t = Table::new("rows", &["divisor", "count"]);
        t.push(vec![tuple(&[3, 1, 0]), Value::from(2)]);
        t.push(vec![tuple(&[]), Value::Null]);
        let mut r = Report::new("demo");
        r.tables.push(t);
        r
    }

    #[test]
    fn json_keeps_column_order() {
        let s = sample().render(Format::Json).unwrap();
        let v: Value = serde_json::from_str(&s).unwrap();
        assert_eq!(v["command"], "demo");
        let row = &v["tables"][0]["rows"][0];
        assert_eq!(row["divisor"], serde_json::json!([3, 1, 0]));
        let keys: Vec<&String> = row.as_object().unwrap().keys().collect();
        assert_eq!(keys, ["divisor", "count"]);
    }

    #[test]
    fn csv_and_pretty_project_the_same_rows() {
        let csv = sample().render(Format::Csv).unwrap();
        assert_eq!(csv, "# rows\ndivisor,count\n\"(3,1,0)\",2\n(),-\n");
        let pretty = sample().render(Format::Pretty).unwrap();
        assert_eq!(pretty, "rows (2 rows)\ndivisor  count\n-------  -----\n(3,1,0)  2\n()       -\n");
    }

    #[test]
    fn big_values_become_strings() {
        let huge = BigInt::from(u64::MAX) * 4;
        assert_eq!(bigint(&huge), Value::String(huge.to_string()));
        assert_eq!(bigint(&BigInt::from(-7)), Value::from(-7));
    }
}
