//! Report rendering: one report model, three formats.
//!
//! Table output rounds to 5 significant digits for reading; JSON and CSV
//! carry the same values at full round-trip precision (both go through the
//! same shortest-round-trip formatter, so the strings agree between them).

use std::io::Write;

use anyhow::Result;
use clap::ValueEnum;
use serde_json::{json, Map, Value};

use crate::manifest::RunManifest;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Table,
    Json,
    Csv,
}

/// A single report value.
#[derive(Debug, Clone)]
pub enum Scalar {
    Count(u64),
    Real(f64),
    Text(String),
    /// Rendered as an empty cell / null (e.g. an undefined growth ratio).
    Missing,
}

impl Scalar {
    fn to_json(&self) -> Value {
        match self {
            Scalar::Count(v) => json!(v),
            Scalar::Real(v) => json!(v),
            Scalar::Text(v) => json!(v),
            Scalar::Missing => Value::Null,
        }
    }

    /// Full-precision text, identical to the JSON rendering.
    pub fn full(&self) -> String {
        match self {
            Scalar::Text(v) => v.clone(),
            Scalar::Missing => String::new(),
            other => serde_json::to_string(&other.to_json()).expect("scalar serializes"),
        }
    }

    /// Display text: reals at 5 significant digits.
    fn display(&self) -> String {
        match self {
            Scalar::Real(v) => sig5(*v),
            other => other.full(),
        }
    }
}

/// Five significant digits, plain decimal notation.
pub fn sig5(x: f64) -> String {
    if x == 0.0 {
        return "0.0000".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (4 - magnitude).max(0) as usize;
    format!("{x:.decimals$}")
}

/// Tabular series attached to a report (a curve, a trajectory).
#[derive(Debug, Clone)]
pub struct Series {
    pub name: String,
    pub headers: Vec<String>,
    pub rows: Vec<Vec<Scalar>>,
}

/// One invocation's output: ordered scalar fields plus an optional series.
#[derive(Debug, Clone)]
pub struct Report {
    pub manifest: RunManifest,
    pub fields: Vec<(String, Scalar)>,
    pub series: Option<Series>,
}

impl Report {
    pub fn new(manifest: RunManifest) -> Self {
        Self {
            manifest,
            fields: Vec::new(),
            series: None,
        }
    }

    pub fn field(mut self, name: &str, value: Scalar) -> Self {
        self.fields.push((name.to_string(), value));
        self
    }

    pub fn series(mut self, series: Series) -> Self {
        self.series = Some(series);
        self
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Table => Ok(self.render_table()),
            Format::Json => self.render_json(),
            Format::Csv => self.render_csv(),
        }
    }

    fn render_table(&self) -> String {
        let mut out = String::new();
        let key_width = self
            .fields
            .iter()
            .map(|(k, _)| k.len())
            .max()
            .unwrap_or(0);
        for (key, value) in &self.fields {
            out.push_str(&format!("{key:<key_width$}  {}\n", value.display()));
        }
        if let Some(series) = &self.series {
            if !self.fields.is_empty() {
                out.push('\n');
            }
            out.push_str(&series.headers.join("  "));
            out.push('\n');
            for row in &series.rows {
                let cells: Vec<String> = row.iter().map(|s| s.display()).collect();
                out.push_str(&cells.join("  "));
                out.push('\n');
            }
        }
        out
    }

    fn render_json(&self) -> Result<String> {
        let mut object = Map::new();
        object.insert("manifest".to_string(), serde_json::to_value(&self.manifest)?);
        for (key, value) in &self.fields {
            object.insert(key.clone(), value.to_json());
        }
        if let Some(series) = &self.series {
            let rows: Vec<Value> = series
                .rows
                .iter()
                .map(|row| {
                    let mut entry = Map::new();
                    for (header, cell) in series.headers.iter().zip(row) {
                        entry.insert(header.clone(), cell.to_json());
                    }
                    Value::Object(entry)
                })
                .collect();
            object.insert(series.name.clone(), Value::Array(rows));
        }
        let mut text = serde_json::to_string_pretty(&Value::Object(object))?;
        text.push('\n');
        Ok(text)
    }

    /// CSV of the series when present, otherwise a one-row CSV of the fields.
    fn render_csv(&self) -> Result<String> {
        let mut writer = csv::Writer::from_writer(Vec::new());
        match &self.series {
            Some(series) => {
                writer.write_record(&series.headers)?;
                for row in &series.rows {
                    writer.write_record(row.iter().map(|s| s.full()))?;
                }
            }
            None => {
                writer.write_record(self.fields.iter().map(|(k, _)| k.as_str()))?;
                writer.write_record(self.fields.iter().map(|(_, v)| v.full()))?;
            }
        }
        Ok(String::from_utf8(writer.into_inner()?)?)
    }

    /// Print to stdout or write to `path` (with a sibling manifest file).
    pub fn emit(&self, format: Format, output: Option<&std::path::Path>) -> Result<()> {
        let rendered = self.render(format)?;
        match output {
            None => {
                let mut stdout = std::io::stdout().lock();
                stdout.write_all(rendered.as_bytes())?;
            }
            Some(path) => {
                std::fs::write(path, rendered)?;
                // JSON embeds the manifest already; other formats get it
                // as a sibling file.
                if format != Format::Json {
                    let manifest_path = sibling_manifest_path(path);
                    let mut text = serde_json::to_string_pretty(&self.manifest)?;
                    text.push('\n');
                    std::fs::write(manifest_path, text)?;
                }
            }
        }
        Ok(())
    }
}

pub fn sibling_manifest_path(path: &std::path::Path) -> std::path::PathBuf {
    let mut name = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "output".to_string());
    name.push_str(".manifest.json");
    path.with_file_name(name)
}
