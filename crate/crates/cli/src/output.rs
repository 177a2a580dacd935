//! Text, JSON and CSV writers. Every number is written as a decimal string
//! in JSON and CSV so consumers never need a fixed integer width.

use std::io::Write;

use padic_core::Prime;
use serde::Serialize;

use crate::eval::{Inputs, Value};
use crate::query::Target;
use crate::verify::VerifyReport;
use crate::{CliError, Format};

#[derive(Serialize)]
struct EvalRecord<'a> {
    target: &'a str,
    p: String,
    n: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<&'a str>,
    value: String,
}

#[derive(Serialize)]
struct TableRow {
    n: String,
    value: String,
}

#[derive(Serialize)]
struct TableRecord<'a> {
    target: &'a str,
    p: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<&'a str>,
    rows: Vec<TableRow>,
}

#[derive(Serialize)]
struct VerifyRecord<'a> {
    ok: bool,
    reports: &'a [VerifyReport],
}

fn prime_text(p: Option<&Prime>) -> String {
    p.map(ToString::to_string).unwrap_or_default()
}

pub fn eval(
    out: &mut dyn Write,
    format: Format,
    target: Target,
    p: Option<&Prime>,
    inputs: &Inputs<'_>,
    value: &Value,
) -> Result<(), CliError> {
    let record = EvalRecord {
        target: target.name(),
        p: prime_text(p),
        n: inputs.n.unwrap_or_default().to_string(),
        k: inputs.k,
        value: value.render(),
    };
    match format {
        Format::Text => writeln!(out, "{}", record.value)?,
        Format::Json => {
            serde_json::to_writer(&mut *out, &record)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["target", "p", "n", "k", "value"])?;
            w.write_record([
                record.target,
                &record.p,
                &record.n,
                record.k.unwrap_or_default(),
                &record.value,
            ])?;
            w.flush()?;
        }
    }
    Ok(())
}

pub fn table(
    out: &mut dyn Write,
    format: Format,
    target: Target,
    p: Option<&Prime>,
    k: Option<&str>,
    rows: &[(u64, Value)],
) -> Result<(), CliError> {
    match format {
        Format::Text => {
            for (n, value) in rows {
                writeln!(out, "{n}\t{}", value.render())?;
            }
        }
        Format::Json => {
            let record = TableRecord {
                target: target.name(),
                p: prime_text(p),
                k,
                rows: rows
                    .iter()
                    .map(|(n, v)| TableRow {
                        n: n.to_string(),
                        value: v.render(),
                    })
                    .collect(),
            };
            serde_json::to_writer(&mut *out, &record)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["target", "p", "n", "k", "value"])?;
            let p = prime_text(p);
            for (n, value) in rows {
                w.write_record([
                    target.name(),
                    &p,
                    &n.to_string(),
                    k.unwrap_or_default(),
                    &value.render(),
                ])?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

pub fn verify(out: &mut dyn Write, format: Format, reports: &[VerifyReport]) -> Result<(), CliError> {
    match format {
        Format::Text => {
            for r in reports {
                writeln!(
                    out,
                    "{}: {}: checked {}, failures {}",
                    r.identity,
                    r.grid,
                    r.checked,
                    r.failures.len()
                )?;
                for f in &r.failures {
                    let k = f.k.as_deref().map(|k| format!(" k={k}")).unwrap_or_default();
                    writeln!(out, "  FAIL p={} n={}{k}: {} != {}", f.p, f.n, f.lhs, f.rhs)?;
                }
                for f in &r.inconsistencies {
                    let k = f.k.as_deref().map(|k| format!(" k={k}")).unwrap_or_default();
                    writeln!(out, "  INCONSISTENCY p={} n={}{k}: {}", f.p, f.n, f.lhs)?;
                }
            }
        }
        Format::Json => {
            let record = VerifyRecord {
                ok: reports.iter().all(VerifyReport::passed),
                reports,
            };
            serde_json::to_writer(&mut *out, &record)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["identity", "grid", "checked", "failures", "inconsistencies"])?;
            for r in reports {
                w.write_record([
                    r.identity.as_str(),
                    &r.grid,
                    &r.checked.to_string(),
                    &r.failures.len().to_string(),
                    &r.inconsistencies.len().to_string(),
                ])?;
            }
            w.flush()?;
        }
    }
    Ok(())
}
