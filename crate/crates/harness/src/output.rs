//! Report serialization: a JSON array or a CSV table.

use std::fs;
use std::path::Path;
use std::str::FromStr;
use std::time::Duration;

use indexmap::IndexMap;
use mhs_core::{Status, VerificationReport};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(format!("unknown format {other:?} (expected json or csv)")),
        }
    }
}

/// Serialized form of a report; field order is the output order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Record {
    pub identity: String,
    pub params: IndexMap<String, String>,
    pub status: Status,
    pub lhs: String,
    pub rhs: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

impl Record {
    /// `timing = false` drops the elapsed time so identical runs produce
    /// byte-identical output.
    pub fn from_report(r: &VerificationReport, timing: bool) -> Self {
        Record {
            identity: r.identity.clone(),
            params: r.params.clone(),
            status: r.status,
            lhs: r.lhs.clone(),
            rhs: r.rhs.clone(),
            reason: r.reason.clone(),
            elapsed_ms: timing.then_some(r.elapsed.as_secs_f64() * 1e3),
        }
    }

    pub fn into_report(self) -> VerificationReport {
        VerificationReport {
            identity: self.identity,
            params: self.params,
            status: self.status,
            lhs: self.lhs,
            rhs: self.rhs,
            reason: self.reason,
            elapsed: Duration::from_secs_f64(self.elapsed_ms.unwrap_or(0.0) / 1e3),
        }
    }
}

pub fn to_json(reports: &[VerificationReport], timing: bool) -> String {
    let records: Vec<Record> = reports.iter().map(|r| Record::from_report(r, timing)).collect();
    serde_json::to_string_pretty(&records).expect("records serialize")
}

pub fn from_json(text: &str) -> serde_json::Result<Vec<VerificationReport>> {
    let records: Vec<Record> = serde_json::from_str(text)?;
    Ok(records.into_iter().map(Record::into_report).collect())
}

const CSV_HEADER: [&str; 7] = ["identity", "params", "status", "lhs", "rhs", "reason", "elapsed_ms"];

/// One row per report; `params` is rendered as `key=value` pairs joined by `;`.
pub fn to_csv(reports: &[VerificationReport], timing: bool) -> anyhow::Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER)?;
    for r in reports {
        let params: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let elapsed = if timing {
            format!("{:.3}", r.elapsed.as_secs_f64() * 1e3)
        } else {
            String::new()
        };
        w.write_record([
            r.identity.as_str(),
            &params.join(";"),
            &r.status.to_string(),
            &r.lhs,
            &r.rhs,
            r.reason.as_deref().unwrap_or(""),
            &elapsed,
        ])?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

pub fn render(reports: &[VerificationReport], format: Format, timing: bool) -> anyhow::Result<String> {
    match format {
        Format::Json => Ok(to_json(reports, timing)),
        Format::Csv => to_csv(reports, timing),
    }
}

/// Writes the rendered reports to `path`; I/O errors are returned verbatim.
pub fn emit_report(reports: &[VerificationReport], format: Format, path: &Path, timing: bool) -> anyhow::Result<()> {
    fs::write(path, render(reports, format, timing)?)?;
    Ok(())
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

impl Summary {
    pub fn of(reports: &[VerificationReport]) -> Self {
        let mut s = Summary::default();
        for r in reports {
            match r.status {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::Skipped => s.skipped += 1,
            }
        }
        s
    }

    /// Process exit code: 0 iff nothing failed.
    pub fn exit_code(&self) -> i32 {
        i32::from(self.fail > 0)
    }
}
