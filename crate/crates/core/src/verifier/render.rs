use std::fmt::Write;
use std::str::FromStr;

use super::{LinearColumn, VerificationReport, Verdict};
use crate::error::{Error, Result};
use crate::exact::{to_decimal, to_exact_decimal, to_fraction};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Markdown,
    Csv,
    /// JSON document; [`parse_structured`] inverts it exactly.
    Structured,
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "markdown" | "md" => Ok(ReportFormat::Markdown),
            "csv" => Ok(ReportFormat::Csv),
            "structured" | "json" => Ok(ReportFormat::Structured),
            _ => Err(Error::Report(format!("unknown format {s:?}"))),
        }
    }
}

pub const CSV_HEADER: &str = "n,e,linear_bound,p,prob_bound,target,satisfied,refined_e,refined_p,refined_bound";

fn linear_header(column: LinearColumn) -> String {
    match column {
        LinearColumn::Best => "best linear bound".to_string(),
        LinearColumn::Rule(id) => format!("bound {id}"),
    }
}

fn verdict_name(v: Verdict) -> &'static str {
    match v {
        Verdict::Verified => "Verified",
        Verdict::GapsRemain => "GapsRemain",
    }
}

fn render_csv(report: &VerificationReport) -> String {
    let mut out = String::new();
    out.push_str(CSV_HEADER);
    out.push('\n');
    for row in &report.rows {
        let refined = match &row.refined {
            Some(r) => format!("{},{},{}", r.e, to_exact_decimal(&r.p, 3), r.prob_bound),
            None => ",,".to_string(),
        };
        writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            row.n,
            row.e,
            row.linear_bound,
            to_exact_decimal(&row.p, 3),
            row.prob_bound,
            row.target,
            row.satisfied,
            refined
        )
        .unwrap();
    }
    out
}

fn render_markdown(report: &VerificationReport) -> String {
    let mut out = String::new();
    let target = report.tail.target;
    writeln!(out, "## r = {}\n", report.r).unwrap();
    writeln!(out, "Target: Z({}) = {target}\n", report.r).unwrap();
    writeln!(out, "| n | e | {} | p | ⌈cr(n,m,p)⌉ |", linear_header(report.linear_column)).unwrap();
    writeln!(out, "|---|---|---|---|---|").unwrap();
    for row in &report.rows {
        writeln!(
            out,
            "| {} | {} | {} | {} | {} |",
            row.n,
            row.e,
            row.linear_bound,
            to_exact_decimal(&row.p, 3),
            row.prob_bound
        )
        .unwrap();
    }
    out.push('\n');
    for row in report.rows.iter() {
        if let Some(refined) = &row.refined {
            writeln!(
                out,
                "- n = {}: join refinement gives e = {}, p = {}, ⌈cr(n,m,p)⌉ = {}",
                row.n,
                refined.e,
                to_exact_decimal(&refined.p, 3),
                refined.prob_bound
            )
            .unwrap();
        }
    }
    writeln!(out, "- {}", report.small_n_note).unwrap();
    let tail = &report.tail;
    writeln!(
        out,
        "- Tail n ≥ {} with p = {}: bound ≥ {}·n + {} − tail, anchor {} ({}), {}",
        tail.n0,
        to_exact_decimal(&tail.p, 3),
        to_decimal(&tail.slope, 4),
        to_decimal(&tail.intercept, 4),
        to_decimal(&tail.anchor, 4),
        to_fraction(&tail.anchor),
        if tail.valid { "valid" } else { "invalid" }
    )
    .unwrap();
    if !report.gaps.is_empty() {
        let gaps: Vec<String> = report.gaps.iter().map(|n| n.to_string()).collect();
        writeln!(out, "- Gaps: n = {}", gaps.join(", ")).unwrap();
    }
    writeln!(out, "\nVerdict: {}", verdict_name(report.verdict)).unwrap();
    out
}

/// Deterministic rendering of a report.
pub fn render_report(report: &VerificationReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Csv => render_csv(report),
        ReportFormat::Markdown => render_markdown(report),
        ReportFormat::Structured => {
            let mut s = serde_json::to_string_pretty(report).expect("report serializes");
            s.push('\n');
            s
        }
    }
}

pub fn parse_structured(text: &str) -> Result<VerificationReport> {
    serde_json::from_str(text).map_err(|e| Error::Report(e.to_string()))
}
