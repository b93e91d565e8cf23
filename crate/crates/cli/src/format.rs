//! Rendering of command results as text, CSV or JSON lines.
//!
//! JSON lines: one object per line, `kind` first. Shapes:
//!
//! ```text
//! {"kind":"polynomial","n":3,"coeffs":["-1"]}                      pk
//! {"kind":"polynomial","name":"norlund","n":2,"coeffs":["0","-1/12","1/4"]}
//! {"kind":"sequence","name":"m","index":0,"value":"1"}             mseq, bernoulli
//! {"kind":"scalar","name":"stirling1","n":4,"k":2,"value":"11"}
//! {"kind":"report","identity":"stirling-even","checked":2400,"failed":0,"status":"pass"}
//! {"kind":"report","identity":"...","k":1,"n":4,"status":"fail","left":"..","right":".."}
//! ```
//!
//! Coefficients are ascending and exact; rationals are `num/den` with the
//! denominator omitted when it is 1.

use std::fmt::Write as _;

use clap::ValueEnum;
use norlund_core::theorem::{IdentitySummary, SuiteOutcome, VerificationReport};
use norlund_core::{Integer, PolyQ, PolyZ, Rational};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Csv,
    Json,
}

#[derive(Serialize)]
struct PolynomialRecord<'a> {
    kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    name: Option<&'a str>,
    n: usize,
    coeffs: Vec<String>,
}

#[derive(Serialize)]
struct SequenceRecord<'a> {
    kind: &'static str,
    name: &'a str,
    index: usize,
    value: String,
}

#[derive(Serialize)]
struct ScalarRecord<'a> {
    kind: &'static str,
    name: &'a str,
    n: i64,
    k: i64,
    value: String,
}

#[derive(Serialize)]
struct SummaryRecord<'a> {
    kind: &'static str,
    identity: &'a str,
    checked: usize,
    failed: usize,
    status: &'static str,
}

#[derive(Serialize)]
struct ReportRecord<'a> {
    kind: &'static str,
    identity: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    n: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    x: Option<i64>,
    status: &'static str,
    left: &'a str,
    right: &'a str,
}

fn json_line<T: Serialize>(out: &mut String, record: &T) {
    out.push_str(&serde_json::to_string(record).expect("records serialize"));
    out.push('\n');
}

fn ascending<T: ToString>(coeffs: &[T]) -> Vec<String> {
    coeffs.iter().map(ToString::to_string).collect()
}

/// `P_n(x)`.
pub fn primitive(n: usize, poly: &PolyZ, format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Text => writeln!(out, "P_{n}(x) = {poly}").unwrap(),
        Format::Csv => {
            out.push_str("n,coeffs\n");
            writeln!(out, "{n},{}", ascending(poly.coeffs()).join(";")).unwrap();
        }
        Format::Json => json_line(
            &mut out,
            &PolynomialRecord {
                kind: "polynomial",
                name: None,
                n,
                coeffs: ascending(poly.coeffs()),
            },
        ),
    }
    out
}

/// `B_n^(x)`. The ascending list always includes the constant term.
pub fn norlund(n: usize, poly: &PolyQ, format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Text => writeln!(out, "B_{n}^(x) = {poly}").unwrap(),
        Format::Csv => {
            out.push_str("n,coeffs\n");
            writeln!(out, "{n},{}", ascending(poly.coeffs()).join(";")).unwrap();
        }
        Format::Json => json_line(
            &mut out,
            &PolynomialRecord {
                kind: "polynomial",
                name: Some("norlund"),
                n,
                coeffs: ascending(poly.coeffs()),
            },
        ),
    }
    out
}

/// A sequence starting at index 0; `name` labels the CSV column and the
/// JSON `name` field.
pub fn sequence<T: ToString>(name: &str, values: &[T], format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Text => {
            for v in values {
                writeln!(out, "{}", v.to_string()).unwrap();
            }
        }
        Format::Csv => {
            writeln!(out, "n,{name}").unwrap();
            for (i, v) in values.iter().enumerate() {
                writeln!(out, "{i},{}", v.to_string()).unwrap();
            }
        }
        Format::Json => {
            for (i, v) in values.iter().enumerate() {
                json_line(
                    &mut out,
                    &SequenceRecord {
                        kind: "sequence",
                        name,
                        index: i,
                        value: v.to_string(),
                    },
                );
            }
        }
    }
    out
}

pub fn stirling(n: i64, k: i64, value: &Integer, format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Text => writeln!(out, "{value}").unwrap(),
        Format::Csv => {
            out.push_str("n,k,s\n");
            writeln!(out, "{n},{k},{value}").unwrap();
        }
        Format::Json => json_line(
            &mut out,
            &ScalarRecord {
                kind: "scalar",
                name: "stirling1",
                n,
                k,
                value: value.to_string(),
            },
        ),
    }
    out
}

pub fn bernoulli(values: &[Rational], format: Format) -> String {
    sequence("B", values, format)
}

fn report_csv_row(out: &mut String, r: &VerificationReport) {
    let opt = |v: Option<String>| v.unwrap_or_default();
    writeln!(
        out,
        "{},{},{},{},{},{},{}",
        r.identity,
        opt(r.point.k.map(|v| v.to_string())),
        opt(r.point.n.map(|v| v.to_string())),
        opt(r.point.x.map(|v| v.to_string())),
        r.status.as_str(),
        r.left,
        r.right
    )
    .unwrap();
}

/// Per-identity summary followed by every failing comparison.
pub fn verification(outcome: &SuiteOutcome, format: Format) -> String {
    let summary: Vec<IdentitySummary> = norlund_core::theorem::summarize(&outcome.reports);
    let failures: Vec<&VerificationReport> = outcome.failures().collect();
    let mut out = String::new();
    match format {
        Format::Text => {
            let width = summary.iter().map(|s| s.identity.name().len()).max().unwrap_or(0);
            for s in &summary {
                writeln!(
                    out,
                    "{}  {:<width$}  checked={} failed={}",
                    s.status().as_str(),
                    s.identity.name(),
                    s.checked,
                    s.failed
                )
                .unwrap();
            }
            for r in &failures {
                writeln!(out, "FAIL {r}").unwrap();
            }
            if outcome.stopped_early {
                out.push_str("stopped after the first failing identity family (--fail-fast)\n");
            }
            let failed_ids = summary.iter().filter(|s| s.failed > 0).count();
            if failed_ids == 0 {
                writeln!(out, "all {} identities hold ({} exact comparisons)", summary.len(), outcome.reports.len()).unwrap();
            } else {
                writeln!(out, "{failed_ids} of {} identities failed", summary.len()).unwrap();
            }
        }
        Format::Csv => {
            out.push_str("identity,checked,failed,status\n");
            for s in &summary {
                writeln!(out, "{},{},{},{}", s.identity, s.checked, s.failed, s.status().as_str()).unwrap();
            }
            if !failures.is_empty() {
                out.push_str("\nidentity,k,n,x,status,left,right\n");
                for r in &failures {
                    report_csv_row(&mut out, r);
                }
            }
        }
        Format::Json => {
            for s in &summary {
                json_line(
                    &mut out,
                    &SummaryRecord {
                        kind: "report",
                        identity: s.identity.name(),
                        checked: s.checked,
                        failed: s.failed,
                        status: s.status().as_str(),
                    },
                );
            }
            for r in &failures {
                json_line(
                    &mut out,
                    &ReportRecord {
                        kind: "report",
                        identity: r.identity.name(),
                        k: r.point.k,
                        n: r.point.n,
                        x: r.point.x,
                        status: r.status.as_str(),
                        left: &r.left,
                        right: &r.right,
                    },
                );
            }
        }
    }
    out
}
