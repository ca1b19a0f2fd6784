//! Check reports and tables, rendered as CSV or JSON.

use serde::Serialize;
use serde_json::{Map, Value};

use crate::cli::Format;

/// One verified property. `pass` is decided by the producer, usually `measured ≤ tolerance`.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub check_id: String,
    pub paper_ref: &'static str,
    pub measured: f64,
    pub tolerance: f64,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl Check {
    /// Passes when `measured ≤ tolerance`; NaN fails.
    pub fn at_most(check_id: &str, paper_ref: &'static str, measured: f64, tolerance: f64) -> Self {
        Self { check_id: check_id.into(), paper_ref, measured, tolerance, pass: measured <= tolerance, error: None }
    }

    pub fn failed(check_id: &str, paper_ref: &'static str, tolerance: f64, error: String) -> Self {
        Self { check_id: check_id.into(), paper_ref, measured: f64::NAN, tolerance, pass: false, error: Some(error) }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub suite: String,
    pub xi: f64,
    pub q: f64,
    pub pass: bool,
    pub checks: Vec<Check>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(i64),
    Num(f64),
    Text(String),
    Empty,
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Num(v)
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<Option<f64>> for Cell {
    fn from(v: Option<f64>) -> Self {
        v.map_or(Cell::Empty, Cell::Num)
    }
}

#[derive(Debug, Clone)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

/// 17 significant digits, enough to round-trip any `f64`.
pub fn fmt_num(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.16e}")
    } else {
        format!("{v}")
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn json_num(v: f64) -> Value {
    serde_json::Number::from_f64(v).map_or(Value::Null, Value::Number)
}

impl Table {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => {
                let mut out = self.columns.join(",");
                out.push('\n');
                for row in &self.rows {
                    let fields: Vec<String> = row
                        .iter()
                        .map(|c| match c {
                            Cell::Int(v) => v.to_string(),
                            Cell::Num(v) => fmt_num(*v),
                            Cell::Text(s) => csv_field(s),
                            Cell::Empty => String::new(),
                        })
                        .collect();
                    out.push_str(&fields.join(","));
                    out.push('\n');
                }
                out
            }
            Format::Json => {
                let rows: Vec<Value> = self
                    .rows
                    .iter()
                    .map(|row| {
                        let mut m = Map::new();
                        for (k, c) in self.columns.iter().zip(row) {
                            let v = match c {
                                Cell::Int(v) => Value::from(*v),
                                Cell::Num(v) => json_num(*v),
                                Cell::Text(s) => Value::from(s.as_str()),
                                Cell::Empty => Value::Null,
                            };
                            m.insert((*k).to_string(), v);
                        }
                        Value::Object(m)
                    })
                    .collect();
                let mut s = serde_json::to_string_pretty(&rows).expect("table serializes");
                s.push('\n');
                s
            }
        }
    }
}

impl Report {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("report serializes");
                s.push('\n');
                s
            }
            Format::Csv => {
                let table = Table {
                    columns: vec!["check_id", "paper_ref", "measured", "tolerance", "pass", "error"],
                    rows: self
                        .checks
                        .iter()
                        .map(|c| {
                            vec![
                                Cell::Text(c.check_id.clone()),
                                Cell::Text(c.paper_ref.into()),
                                Cell::Num(c.measured),
                                Cell::Num(c.tolerance),
                                Cell::Text(c.pass.to_string()),
                                c.error.clone().map_or(Cell::Empty, Cell::Text),
                            ]
                        })
                        .collect(),
                };
                table.render(Format::Csv)
            }
        }
    }
}
