//! CSV and JSON writers with a fixed number format.

use std::io::Write;

use serde::Serialize;

use super::report::{VerificationReport, SCHEMA};
use crate::error::{Error, Result};

/// Seventeen significant digits, enough to round-trip any `f64`.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

/// Plot-ready numeric table with a single header line.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

impl Table {
    pub fn new(columns: &[&str]) -> Self {
        Table {
            columns: columns.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<f64>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let i = self.columns.iter().position(|c| c == name)?;
        Some(self.rows.iter().map(|r| r[i]).collect())
    }

    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv_writer(out);
        w.write_record(&self.columns).map_err(io_err)?;
        for row in &self.rows {
            w.write_record(row.iter().map(|v| fmt_f64(*v))).map_err(io_err)?;
        }
        w.flush().map_err(|e| io_err(e.into()))
    }

    /// Rows as a list of objects keyed by column name.
    pub fn to_json(&self) -> serde_json::Value {
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let obj = self.columns.iter().cloned().zip(r.iter().map(|v| json_num(*v))).collect();
                serde_json::Value::Object(obj)
            })
            .collect();
        serde_json::Value::Array(rows)
    }
}

fn json_num(v: f64) -> serde_json::Value {
    serde_json::Number::from_f64(v).map_or(serde_json::Value::Null, serde_json::Value::Number)
}

fn csv_writer<W: Write>(out: W) -> csv::Writer<W> {
    csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out)
}

fn io_err(e: csv::Error) -> Error {
    Error::domain("output", e.to_string())
}

/// JSON document `{"schema": ..., "kind": ..., <payload fields>}`.
pub fn json_document<T: Serialize>(kind: &str, payload: &T) -> Result<serde_json::Value> {
    let mut value = serde_json::to_value(payload).map_err(|e| Error::domain("output", e.to_string()))?;
    let body = match value.as_object_mut() {
        Some(obj) => std::mem::take(obj),
        None => {
            let mut m = serde_json::Map::new();
            m.insert("data".into(), value);
            m
        }
    };
    let mut doc = serde_json::Map::new();
    doc.insert("schema".into(), SCHEMA.into());
    doc.insert("kind".into(), kind.into());
    doc.extend(body);
    Ok(serde_json::Value::Object(doc))
}

pub fn write_json<W: Write>(mut out: W, value: &serde_json::Value) -> Result<()> {
    let mut s = serde_json::to_string_pretty(value).map_err(|e| Error::domain("output", e.to_string()))?;
    s.push('\n');
    out.write_all(s.as_bytes()).map_err(|e| Error::domain("output", e.to_string()))
}

pub fn report_csv<W: Write>(report: &VerificationReport, out: W) -> Result<()> {
    let mut w = csv_writer(out);
    w.write_record(["suite", "id", "reference", "residual", "tolerance", "passed", "seed"])
        .map_err(io_err)?;
    for r in &report.records {
        w.write_record([
            report.suite.name().to_string(),
            r.id.clone(),
            r.reference.clone(),
            fmt_f64(r.residual),
            fmt_f64(r.tolerance),
            r.passed.to_string(),
            r.seed.to_string(),
        ])
        .map_err(io_err)?;
    }
    w.flush().map_err(|e| io_err(e.into()))
}

pub fn report_json<W: Write>(report: &VerificationReport, out: W) -> Result<()> {
    write_json(out, &serde_json::to_value(report).map_err(|e| Error::domain("output", e.to_string()))?)
}
