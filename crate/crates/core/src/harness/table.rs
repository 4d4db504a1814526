use super::config::ExperimentConfig;
use crate::error::{Error, Result};
use serde::Serialize;
use std::fmt;

/// One table cell. Reals print in shortest round-trip form.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Cell {
    Int(i64),
    Real(f64),
    Text(String),
    Bool(bool),
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cell::Int(v) => write!(f, "{v}"),
            Cell::Real(v) => write!(f, "{v}"),
            Cell::Text(v) => f.write_str(v),
            Cell::Bool(v) => write!(f, "{v}"),
        }
    }
}

impl From<i64> for Cell {
    fn from(v: i64) -> Self {
        Cell::Int(v)
    }
}

impl From<u32> for Cell {
    fn from(v: u32) -> Self {
        Cell::Int(i64::from(v))
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Real(v)
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Bool(v)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_string())
    }
}

impl From<String> for Cell {
    fn from(v: String) -> Self {
        Cell::Text(v)
    }
}

/// A named inequality an experiment asserts: `observed <= limit` (or `>=`).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub observed: f64,
    pub limit: f64,
    pub relation: &'static str,
}

impl Check {
    pub fn at_most(name: impl Into<String>, observed: f64, limit: f64) -> Self {
        Self { name: name.into(), passed: observed <= limit, observed, limit, relation: "<=" }
    }

    pub fn at_least(name: impl Into<String>, observed: f64, limit: f64) -> Self {
        Self { name: name.into(), passed: observed >= limit, observed, limit, relation: ">=" }
    }

    pub fn above(name: impl Into<String>, observed: f64, limit: f64) -> Self {
        Self { name: name.into(), passed: observed > limit, observed, limit, relation: ">" }
    }

    /// A boolean condition; `observed` and `limit` are 1 and 1 when it holds.
    pub fn holds(name: impl Into<String>, ok: bool) -> Self {
        Self { name: name.into(), passed: ok, observed: f64::from(u8::from(ok)), limit: 1.0, relation: "==" }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {}: {} {} {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.name,
            self.observed,
            self.relation,
            self.limit
        )
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Metadata {
    pub experiment: String,
    pub config: String,
    pub version: &'static str,
    pub wall_time_s: f64,
}

/// Rows, checks and metadata of one experiment run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ResultTable {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
    pub checks: Vec<Check>,
    pub metadata: Metadata,
}

impl ResultTable {
    pub fn new(cfg: &ExperimentConfig, columns: &[&'static str]) -> Self {
        Self {
            columns: columns.to_vec(),
            rows: Vec::new(),
            checks: Vec::new(),
            metadata: Metadata {
                experiment: cfg.experiment.to_string(),
                config: cfg.to_text(),
                version: env!("CARGO_PKG_VERSION"),
                wall_time_s: 0.0,
            },
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn check(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }

    /// Header plus rows; no metadata, so reruns compare byte for byte.
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| Error::Json(e.to_string());
        w.write_record(&self.columns).map_err(io)?;
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::to_string)).map_err(io)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Json(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| Error::Json(e.to_string()))
    }

    pub fn to_json(&self) -> Result<String> {
        #[derive(Serialize)]
        struct Doc<'a> {
            metadata: &'a Metadata,
            status: &'static str,
            columns: &'a [&'static str],
            rows: &'a [Vec<Cell>],
            checks: &'a [Check],
        }
        let doc = Doc {
            metadata: &self.metadata,
            status: if self.passed() { "pass" } else { "fail" },
            columns: &self.columns,
            rows: &self.rows,
            checks: &self.checks,
        };
        serde_json::to_string_pretty(&doc).map_err(|e| Error::Json(e.to_string()))
    }
}
