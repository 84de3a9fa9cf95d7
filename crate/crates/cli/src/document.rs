//! Output documents and their JSON / CSV / Markdown renderings.

use clap::ValueEnum;
use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Md,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    Roots,
    Lines,
    Incidence,
    Decompose,
    Orbits,
    Table1,
    Eckardt,
    CheckReport,
}

#[derive(Debug, Clone, Serialize)]
pub struct Meta {
    pub tool: &'static str,
    pub version: &'static str,
    pub ordering: &'static str,
}

impl Meta {
    pub fn current() -> Self {
        Self {
            tool: "atlas",
            version: env!("CARGO_PKG_VERSION"),
            ordering: "roots in lexicographic order of (e0,...,e6); lines in order E1..E6, F12..F56, G1..G6",
        }
    }
}

/// A command result. JSON keys inside `payload` are sorted, so the rendering
/// is byte-stable for a given tool version.
#[derive(Debug, Clone, Serialize)]
pub struct OutputDocument {
    pub kind: Kind,
    pub meta: Meta,
    pub payload: Value,
    #[serde(skip)]
    pub table: Table,
}

/// Tabular view used for the CSV and Markdown renderings. CSV fields are
/// never quoted, so commas inside a cell become semicolons.
#[derive(Debug, Clone, Default)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
    /// Extra Markdown lines printed before the table.
    pub notes: Vec<String>,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Self {
            header: header.iter().map(|s| s.to_string()).collect(),
            ..Self::default()
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }
}

impl OutputDocument {
    pub fn new(kind: Kind, payload: impl Serialize, table: Table) -> Self {
        Self {
            kind,
            meta: Meta::current(),
            payload: serde_json::to_value(payload).expect("payload serializes"),
            table,
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("document serializes");
                s.push('\n');
                s
            }
            Format::Csv => {
                let mut s = String::new();
                for line in std::iter::once(&self.table.header).chain(&self.table.rows) {
                    let cells: Vec<String> = line.iter().map(|c| c.replace(',', ";")).collect();
                    s.push_str(&cells.join(","));
                    s.push('\n');
                }
                s
            }
            Format::Md => {
                let mut s = String::new();
                for n in &self.table.notes {
                    s.push_str(n);
                    s.push_str("\n\n");
                }
                let row = |cells: &[String]| {
                    let cells: Vec<String> = cells.iter().map(|c| c.replace('|', "\\|")).collect();
                    format!("| {} |\n", cells.join(" | "))
                };
                s.push_str(&row(&self.table.header));
                let rule: Vec<String> = self
                    .table
                    .header
                    .iter()
                    .map(|_| "---".to_string())
                    .collect();
                s.push_str(&row(&rule));
                for r in &self.table.rows {
                    s.push_str(&row(r));
                }
                s
            }
        }
    }
}
