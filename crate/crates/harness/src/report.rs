//! Report serialization.

use std::collections::BTreeMap;
use std::path::Path;

use littlewood::report::IdentityReport;
use littlewood::Complex64;
use serde::Serialize;

use crate::error::HarnessResult;

pub const CSV_HEADER: [&str; 10] = [
    "name",
    "param_json",
    "lhs_re",
    "lhs_im",
    "rhs_re",
    "rhs_im",
    "abs_diff",
    "tolerance",
    "pass",
    "wall_time",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum ReportFormat {
    Json,
    Csv,
    Text,
}

#[derive(Serialize)]
struct Cplx {
    re: f64,
    im: f64,
}

impl From<Complex64> for Cplx {
    fn from(z: Complex64) -> Self {
        Self { re: z.re, im: z.im }
    }
}

#[derive(Serialize)]
struct JsonReport<'a> {
    name: &'a str,
    params: &'a BTreeMap<String, String>,
    lhs: Cplx,
    rhs: Cplx,
    abs_diff: f64,
    tolerance: f64,
    pass: bool,
    wall_time: f64,
    notes: &'a str,
}

impl<'a> From<&'a IdentityReport> for JsonReport<'a> {
    fn from(r: &'a IdentityReport) -> Self {
        Self {
            name: &r.name,
            params: &r.params,
            lhs: r.lhs.into(),
            rhs: r.rhs.into(),
            abs_diff: r.abs_diff,
            tolerance: r.tolerance,
            pass: r.pass,
            wall_time: r.wall_time,
            notes: &r.notes,
        }
    }
}

fn json(reports: &[IdentityReport]) -> HarnessResult<String> {
    let rows: Vec<JsonReport> = reports.iter().map(JsonReport::from).collect();
    let mut s = serde_json::to_string_pretty(&rows)?;
    s.push('\n');
    Ok(s)
}

fn csv(reports: &[IdentityReport]) -> HarnessResult<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER)?;
    for r in reports {
        w.write_record([
            r.name.clone(),
            serde_json::to_string(&r.params)?,
            r.lhs.re.to_string(),
            r.lhs.im.to_string(),
            r.rhs.re.to_string(),
            r.rhs.im.to_string(),
            r.abs_diff.to_string(),
            r.tolerance.to_string(),
            r.pass.to_string(),
            r.wall_time.to_string(),
        ])?;
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn cplx_text(z: Complex64) -> String {
    if z.is_finite() {
        format!("{:+.12e}{:+.6e}i", z.re, z.im)
    } else {
        "-".to_string()
    }
}

fn text(reports: &[IdentityReport]) -> String {
    let head = [
        "name",
        "status",
        "abs_diff",
        "tolerance",
        "lhs",
        "rhs",
        "time_s",
    ];
    let rows: Vec<[String; 7]> = reports
        .iter()
        .map(|r| {
            [
                r.name.clone(),
                if r.pass { "PASS" } else { "FAIL" }.to_string(),
                format!("{:.3e}", r.abs_diff),
                format!("{:.1e}", r.tolerance),
                cplx_text(r.lhs),
                cplx_text(r.rhs),
                format!("{:.3}", r.wall_time),
            ]
        })
        .collect();
    let mut width = head.map(str::len);
    for row in &rows {
        for (w, cell) in width.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let line = |cells: Vec<&str>| -> String {
        let parts: Vec<String> = cells
            .iter()
            .zip(width)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        parts.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(head.to_vec());
    out += &line(
        width
            .iter()
            .map(|w| "-".repeat(*w))
            .collect::<Vec<_>>()
            .iter()
            .map(String::as_str)
            .collect(),
    );
    for row in &rows {
        out += &line(row.iter().map(String::as_str).collect());
    }
    let passed = reports.iter().filter(|r| r.pass).count();
    out += &format!("{passed}/{} passed\n", reports.len());
    for r in reports.iter().filter(|r| !r.pass) {
        out += &format!("{}: {}\n", r.name, r.notes);
    }
    out
}

/// Formats reports as a string.
pub fn render_report(reports: &[IdentityReport], format: ReportFormat) -> HarnessResult<String> {
    match format {
        ReportFormat::Json => json(reports),
        ReportFormat::Csv => csv(reports),
        ReportFormat::Text => Ok(text(reports)),
    }
}

/// Writes reports to `path`.
pub fn emit_report(
    reports: &[IdentityReport],
    format: ReportFormat,
    path: impl AsRef<Path>,
) -> HarnessResult<()> {
    std::fs::write(path, render_report(reports, format)?)?;
    Ok(())
}
