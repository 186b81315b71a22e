// Copyright 2026 The abelsq Authors
// SPDX-License-Identifier: Apache-2.0

//! Tabular command output rendered as CSV or JSON.
//!
//! Big integers and fractions are always strings. CSV cells use the same
//! text JSON would print for the value, so both formats compare equal
//! field by field.

use std::fmt;

use serde_json::{json, Map, Value};

pub type Row = Map<String, Value>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Csv => "csv",
            Format::Json => "json",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Metadata {
    pub tool: String,
    pub version: String,
    pub command: String,
    pub seed: Option<u64>,
    pub timestamp: String,
}

impl Metadata {
    /// Timestamp honours `SOURCE_DATE_EPOCH` so whole outputs can be reproduced.
    pub fn for_command(command: impl Into<String>, seed: Option<u64>) -> Self {
        let timestamp = std::env::var("SOURCE_DATE_EPOCH")
            .ok()
            .and_then(|s| s.trim().parse::<i64>().ok())
            .and_then(|secs| chrono::DateTime::from_timestamp(secs, 0))
            .unwrap_or_else(chrono::Utc::now);
        Metadata {
            tool: "abelsq".into(),
            version: env!("CARGO_PKG_VERSION").into(),
            command: command.into(),
            seed,
            timestamp: timestamp.to_rfc3339_opts(chrono::SecondsFormat::Secs, true),
        }
    }

    fn to_json(&self) -> Value {
        let mut m = Map::new();
        m.insert("tool".into(), json!(self.tool));
        m.insert("version".into(), json!(self.version));
        m.insert("command".into(), json!(self.command));
        if let Some(seed) = self.seed {
            m.insert("seed".into(), json!(seed));
        }
        m.insert("timestamp".into(), json!(self.timestamp));
        Value::Object(m)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct OutputRecordSet {
    pub columns: Vec<String>,
    pub rows: Vec<Row>,
    pub metadata: Metadata,
}

impl OutputRecordSet {
    pub fn new(columns: &[&str], metadata: Metadata) -> Self {
        OutputRecordSet {
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
            metadata,
        }
    }

    /// Appends a row; values must be given in column order.
    pub fn push(&mut self, values: Vec<Value>) {
        assert_eq!(values.len(), self.columns.len(), "row width mismatch");
        let row = self.columns.iter().cloned().zip(values).collect();
        self.rows.push(row);
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.render_csv(),
            Format::Json => self.render_json(),
        }
    }

    /// The data section only: everything except metadata.
    pub fn render_rows(&self, format: Format) -> String {
        match format {
            Format::Csv => self.render_csv(),
            Format::Json => {
                let rows = Value::Array(self.rows.iter().cloned().map(Value::Object).collect());
                serde_json::to_string_pretty(&rows).expect("rows serialize")
            }
        }
    }

    fn render_csv(&self) -> String {
        let mut writer = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(Vec::new());
        writer.write_record(&self.columns).expect("in-memory write");
        for row in &self.rows {
            writer
                .write_record(self.columns.iter().map(|c| cell_text(&row[c])))
                .expect("in-memory write");
        }
        String::from_utf8(writer.into_inner().expect("flush")).expect("csv is utf-8")
    }

    fn render_json(&self) -> String {
        let doc = json!({
            "metadata": self.metadata.to_json(),
            "rows": self.rows.iter().cloned().map(Value::Object).collect::<Vec<_>>(),
        });
        let mut s = serde_json::to_string_pretty(&doc).expect("record set serializes");
        s.push('\n');
        s
    }
}

/// The textual form a value takes in a CSV cell.
pub fn cell_text(value: &Value) -> String {
    match value {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> OutputRecordSet {
        let meta = Metadata {
            tool: "abelsq".into(),
            version: "0".into(),
            command: "abelsq express".into(),
            seed: None,
            timestamp: "1970-01-01T00:00:00Z".into(),
        };
        let mut set = OutputRecordSet::new(&["n", "e_ft", "normalized"], meta);
        set.push(vec![json!(2), json!("1/16"), json!(0.8)]);
        set.push(vec![json!(5), json!("1/32"), json!(1.0)]);
        set
    }

    #[test]
    fn csv_layout() {
        assert_eq!(
            sample().render(Format::Csv),
            "n,e_ft,normalized\n2,1/16,0.8\n5,1/32,1.0\n"
        );
    }

    #[test]
    fn json_layout() {
        let doc: Value = serde_json::from_str(&sample().render(Format::Json)).unwrap();
        assert_eq!(doc["metadata"]["tool"], "abelsq");
        assert!(doc["metadata"].get("seed").is_none());
        assert_eq!(doc["rows"][0]["e_ft"], "1/16");
        assert_eq!(doc["rows"][1]["normalized"], 1.0);
    }

    #[test]
    fn formats_agree_fieldwise() {
        let set = sample();
        let doc: Value = serde_json::from_str(&set.render(Format::Json)).unwrap();
        let text = set.render(Format::Csv);
        let mut reader = csv::Reader::from_reader(text.as_bytes());
        let header = reader.headers().unwrap().clone();
        for (record, json_row) in reader.records().zip(doc["rows"].as_array().unwrap()) {
            let record = record.unwrap();
            for (name, cell) in header.iter().zip(record.iter()) {
                assert_eq!(cell, cell_text(&json_row[name]));
            }
        }
    }

    #[test]
    fn empty_set_keeps_header() {
        let mut set = sample();
        set.rows.clear();
        assert_eq!(set.render(Format::Csv), "n,e_ft,normalized\n");
    }
}
