//! Config-driven experiments that reproduce the quantitative claims, and the
//! CSV/JSON tables they emit.
//!
//! A config is a flat `key = value` document:
//!
//! ```text
//! # separator values on and off the ternary set
//! experiment = lemma1
//! R = 729
//! ```
//!
//! Every parameter has a default; [`list_experiments`] prints them.

mod config;
mod experiments;
mod samples;
mod schema;
mod table;

pub use config::{parse_config, ExperimentConfig, ExperimentId, Kind, ParamDef, ParamValue};
pub use samples::random_exp_sum;
pub use table::{Cell, Check, Metadata, ResultTable};

use crate::error::{Error, Result};
use std::path::{Path, PathBuf};
use std::time::Instant;

/// Which files [`write_outputs`] produces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    Csv,
    Json,
    #[default]
    Both,
}

/// Run one experiment; the table's checks carry its pass/fail status.
pub fn run_experiment(cfg: &ExperimentConfig) -> Result<ResultTable> {
    let start = Instant::now();
    let mut table = experiments::run(cfg)?;
    table.metadata.wall_time_s = start.elapsed().as_secs_f64();
    Ok(table)
}

/// Write `<experiment>.csv` and/or `<experiment>.json` into `dir`.
pub fn write_outputs(table: &ResultTable, dir: &Path, format: OutputFormat) -> Result<Vec<PathBuf>> {
    let io = |e: std::io::Error| Error::param("out", format!("{}: {e}", dir.display()));
    std::fs::create_dir_all(dir).map_err(io)?;
    let stem = &table.metadata.experiment;
    let mut written = Vec::new();
    if matches!(format, OutputFormat::Csv | OutputFormat::Both) {
        let path = dir.join(format!("{stem}.csv"));
        std::fs::write(&path, table.to_csv()?).map_err(io)?;
        written.push(path);
    }
    if matches!(format, OutputFormat::Json | OutputFormat::Both) {
        let path = dir.join(format!("{stem}.json"));
        std::fs::write(&path, table.to_json()?).map_err(io)?;
        written.push(path);
    }
    Ok(written)
}

/// Every experiment with its parameters and defaults, one block each.
pub fn list_experiments() -> String {
    let mut s = String::new();
    for id in ExperimentId::ALL {
        s.push_str(&format!("{id}\n    {}\n", id.summary()));
        for p in id.params() {
            s.push_str(&format!("    {:<14} = {:<44} {}\n", p.name, p.default, p.doc));
        }
    }
    s
}
