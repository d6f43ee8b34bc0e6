use std::fs;
use std::io::Write;
use std::path::Path;

use anyhow::{Context, Result};
use serde_json::{json, Map, Value};

use crate::config::Format;

pub const SCHEMA: u32 = 1;

/// Table of numeric rows plus the configuration echo and a summary.
#[derive(Debug, Clone, PartialEq)]
pub struct Artifact {
    pub command: &'static str,
    pub meta: Value,
    /// Ordered key/value pairs shown before the rows.
    pub summary: Vec<(String, Value)>,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<f64>>,
}

impl Artifact {
    pub fn new(command: &'static str, meta: Value, columns: Vec<&'static str>) -> Self {
        Self {
            command,
            meta,
            summary: Vec::new(),
            columns,
            rows: Vec::new(),
        }
    }

    pub fn note(&mut self, key: &str, value: impl Into<Value>) {
        self.summary.push((key.to_string(), value.into()));
    }

    pub fn summary_value(&self, key: &str) -> Option<&Value> {
        self.summary.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Csv => self.to_csv(),
            Format::Json => self.to_json(),
        }
    }

    fn to_csv(&self) -> Result<String> {
        let mut out = format!("# desitter-cat {} schema={SCHEMA}\n", self.command);
        if let Value::Object(meta) = &self.meta {
            for (k, v) in meta {
                out.push_str(&format!("# meta.{k}={}\n", plain(v)));
            }
        }
        for (k, v) in &self.summary {
            out.push_str(&format!("# {k}={}\n", plain(v)));
        }
        out.push_str(&format!("# {}\n", self.columns.join(",")));
        let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(Vec::new());
        for row in &self.rows {
            w.write_record(row.iter().map(|x| x.to_string()))?;
        }
        out.push_str(std::str::from_utf8(&w.into_inner().context("flushing CSV rows")?)?);
        Ok(out)
    }

    fn to_json(&self) -> Result<String> {
        let summary: Map<String, Value> = self.summary.iter().cloned().collect();
        let doc = json!({
            "schema": SCHEMA,
            "command": self.command,
            "meta": self.meta,
            "summary": summary,
            "columns": self.columns,
            "rows": self.rows,
        });
        Ok(serde_json::to_string_pretty(&doc)? + "\n")
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "none".into(),
        other => other.to_string(),
    }
}

/// Writes `text` to `path`, or to stdout without a path.
pub fn emit(text: &str, path: Option<&Path>) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes()).context("writing to stdout")?;
            out.flush().context("writing to stdout")
        }
    }
}
