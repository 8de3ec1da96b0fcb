use std::io::Write;
use std::time::Instant;

use hook_specht::Params;
use serde::Serialize;
use serde_json::{json, Value};

use crate::config::{Format, RunConfig};

pub const SCHEMA: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParamsEcho {
    pub e: u32,
    pub kappa: [u32; 2],
    pub n: usize,
    /// Absent for checks that range over all leg lengths.
    pub m: Option<usize>,
    pub field: String,
}

impl ParamsEcho {
    pub fn new(p: &Params, field: &str, with_m: bool) -> Self {
        ParamsEcho { e: p.e, kappa: p.kappa, n: p.n, m: with_m.then_some(p.m), field: field.to_string() }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ReportRecord {
    pub params: ParamsEcho,
    pub check: String,
    pub status: Status,
    pub details: Value,
    pub timing_ms: f64,
}

impl ReportRecord {
    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }
}

/// Runs `f` and stamps the elapsed time on the record it returns.
pub fn timed(params: ParamsEcho, check: impl Into<String>, f: impl FnOnce() -> (Status, Value)) -> ReportRecord {
    let start = Instant::now();
    let (status, details) = f();
    let ms = start.elapsed().as_secs_f64() * 1e3;
    ReportRecord { params, check: check.into(), status, details, timing_ms: (ms * 1e3).round() / 1e3 }
}

#[derive(Serialize)]
struct CsvRow<'a> {
    e: u32,
    kappa: String,
    n: usize,
    m: String,
    field: &'a str,
    check: &'a str,
    status: Status,
    details: String,
    timing_ms: f64,
}

pub fn render(command: &str, config: &RunConfig, records: &[ReportRecord]) -> anyhow::Result<Vec<u8>> {
    match config.format {
        Format::Json => {
            let count = |s| records.iter().filter(|r| r.status == s).count();
            let doc = json!({
                "schema": SCHEMA,
                "command": command,
                "config": config,
                "results": records,
                "summary": {
                    "total": records.len(),
                    "pass": count(Status::Pass),
                    "fail": count(Status::Fail),
                    "skipped": count(Status::Skipped),
                },
            });
            let mut out = serde_json::to_vec_pretty(&doc)?;
            out.push(b'\n');
            Ok(out)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for r in records {
                w.serialize(CsvRow {
                    e: r.params.e,
                    kappa: format!("{},{}", r.params.kappa[0], r.params.kappa[1]),
                    n: r.params.n,
                    m: r.params.m.map_or(String::new(), |m| m.to_string()),
                    field: &r.params.field,
                    check: &r.check,
                    status: r.status,
                    details: serde_json::to_string(&r.details)?,
                    timing_ms: r.timing_ms,
                })?;
            }
            Ok(w.into_inner()?)
        }
    }
}

pub fn emit(command: &str, config: &RunConfig, records: &[ReportRecord]) -> anyhow::Result<()> {
    let bytes = render(command, config, records)?;
    match &config.output {
        Some(path) => std::fs::write(path, bytes)?,
        None => std::io::stdout().lock().write_all(&bytes)?,
    }
    Ok(())
}
