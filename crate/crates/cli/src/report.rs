//! Reports as aligned text, JSON or CSV.

use std::io::Write;

use casimir_core::contributions::{EnergyBreakdown, LengthSpectrum, Provenance, STATED_TAIL_TOTAL};
use serde_json::{json, Value};

use crate::error::{CliError, Result};
use crate::format::{fmt_f64, json_f64};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    Int(u64),
    Bool(bool),
    Text(String),
    Missing,
}

impl Cell {
    fn render(&self) -> String {
        match self {
            Cell::Num(x) => fmt_f64(*x),
            Cell::Int(n) => n.to_string(),
            Cell::Bool(b) => b.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Missing => "-".to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Row {
    pub key: String,
    pub value: Cell,
    /// Error bound shown next to the value, when there is one.
    pub bound: Option<f64>,
}

pub fn row(key: &str, value: Cell) -> Row {
    Row {
        key: key.to_string(),
        value,
        bound: None,
    }
}

pub fn row_with_bound(key: &str, value: f64, bound: f64) -> Row {
    Row {
        key: key.to_string(),
        value: Cell::Num(value),
        bound: Some(bound),
    }
}

/// One command's output: rows for text and CSV, a JSON document, and
/// optional raw text or CSV that replaces the row table.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub rows: Vec<Row>,
    pub json: Value,
    pub raw_text: Option<String>,
    pub raw_csv: Option<String>,
}

impl Report {
    pub fn new(rows: Vec<Row>, json: Value) -> Report {
        Report {
            rows,
            json,
            raw_text: None,
            raw_csv: None,
        }
    }
}

impl Report {
    pub fn emit(&self, format: OutputFormat, out: &mut dyn Write) -> Result<()> {
        let io = |e: std::io::Error| CliError::Output(e.to_string());
        match format {
            OutputFormat::Text if self.raw_text.is_some() => {
                out.write_all(self.raw_text.as_deref().unwrap_or_default().as_bytes())
                    .map_err(io)?;
            }
            OutputFormat::Text => {
                let width = self
                    .rows
                    .iter()
                    .map(|r| r.key.chars().count())
                    .max()
                    .unwrap_or(0)
                    + 2;
                for r in &self.rows {
                    let pad = width - r.key.chars().count();
                    match r.bound {
                        Some(b) => writeln!(
                            out,
                            "{}{:pad$}{}  (± {})",
                            r.key,
                            "",
                            r.value.render(),
                            fmt_f64(b)
                        ),
                        None => writeln!(out, "{}{:pad$}{}", r.key, "", r.value.render()),
                    }
                    .map_err(io)?;
                }
            }
            OutputFormat::Json => {
                let text = serde_json::to_string_pretty(&self.json)
                    .map_err(|e| CliError::Output(e.to_string()))?;
                writeln!(out, "{text}").map_err(io)?;
            }
            OutputFormat::Csv => match &self.raw_csv {
                Some(raw) => out.write_all(raw.as_bytes()).map_err(io)?,
                None => {
                    let mut w = csv::Writer::from_writer(out);
                    let csv_err = |e: csv::Error| CliError::Output(e.to_string());
                    w.write_record(["component", "value", "bound"])
                        .map_err(csv_err)?;
                    for r in &self.rows {
                        let bound = r.bound.map(fmt_f64).unwrap_or_default();
                        w.write_record([r.key.as_str(), r.value.render().as_str(), bound.as_str()])
                            .map_err(csv_err)?;
                    }
                    w.flush().map_err(io)?;
                }
            },
        }
        Ok(())
    }
}

pub fn provenance_name(p: Provenance) -> &'static str {
    match p {
        Provenance::TableCorpus => "table",
        Provenance::Enumerated => "enumerated",
        Provenance::File => "file",
    }
}

fn opt_num(x: Option<f64>) -> Value {
    x.map_or(Value::Null, json_f64)
}

/// The full breakdown of an energy run.
pub fn energy_report(b: &EnergyBreakdown, cones: &[u32], spec: &LengthSpectrum) -> Report {
    let hyper_value = b.hyperbolic.map(|h| h.value);
    let components = b.tail.map_or(
        Value::Null,
        |t| json!({ "b1": json_f64(t.b1), "b2": json_f64(t.b2), "b3": json_f64(t.b3) }),
    );
    let assumption_holds = b.assumption.map_or(Value::Null, |a| Value::Bool(a.holds));
    let json = json!({
        "signature": {
            "label": b.label,
            "cone_orders": cones,
            "volume": json_f64(b.volume),
        },
        "spectrum": {
            "provenance": provenance_name(spec.provenance()),
            "distinct_lengths": spec.len(),
            "total_multiplicity": spec.total_multiplicity(),
        },
        "identity": {
            "value": json_f64(b.identity.value),
            "bound": json_f64(b.identity.truncation_bound),
            "interval": [json_f64(b.identity_interval.0), json_f64(b.identity_interval.1)],
        },
        "elliptic": {
            "value": json_f64(b.elliptic.value),
            "bound": json_f64(b.elliptic.truncation_bound),
        },
        "hyperbolic": {
            "value": opt_num(hyper_value),
            "head": json_f64(b.hyperbolic_head),
            "tail_bound": json_f64(b.hyperbolic_tail_magnitude_bound),
            "components": components,
        },
        "certified_lower_bound": json_f64(b.certified_lower_bound),
        "stated_tail": {
            "tail_bound": json_f64(STATED_TAIL_TOTAL),
            "certified_lower_bound": opt_num(b.certified_lower_bound_stated_tail),
        },
        "head_estimate": json_f64(b.head_estimate),
        "assumption": {
            "verified_through": b.assumption_verified_through,
            "holds": assumption_holds,
        },
    });

    let mut rows = vec![
        row("signature", Cell::Text(b.label.clone())),
        row("volume", Cell::Num(b.volume)),
        row(
            "spectrum",
            Cell::Text(provenance_name(spec.provenance()).to_string()),
        ),
        row(
            "spectrum multiplicity",
            Cell::Int(spec.total_multiplicity()),
        ),
        row_with_bound("identity", b.identity.value, b.identity.truncation_bound),
        row("identity interval lo", Cell::Num(b.identity_interval.0)),
        row("identity interval hi", Cell::Num(b.identity_interval.1)),
        row_with_bound("elliptic", b.elliptic.value, b.elliptic.truncation_bound),
    ];
    match b.hyperbolic {
        Some(h) => rows.push(row_with_bound("hyperbolic", h.value, h.truncation_bound)),
        None => rows.push(row("hyperbolic", Cell::Missing)),
    }
    rows.push(row("hyperbolic head", Cell::Num(b.hyperbolic_head)));
    if let Some(t) = b.tail {
        rows.push(row("tail b1", Cell::Num(t.b1)));
        rows.push(row("tail b2", Cell::Num(t.b2)));
        rows.push(row("tail b3", Cell::Num(t.b3)));
    }
    rows.push(row(
        "tail total",
        Cell::Num(b.hyperbolic_tail_magnitude_bound),
    ));
    rows.push(row(
        "certified lower bound",
        Cell::Num(b.certified_lower_bound),
    ));
    rows.push(row("stated tail total", Cell::Num(STATED_TAIL_TOTAL)));
    rows.push(row(
        "lower bound, stated tail",
        b.certified_lower_bound_stated_tail
            .map_or(Cell::Missing, Cell::Num),
    ));
    rows.push(row("head estimate", Cell::Num(b.head_estimate)));
    rows.push(row(
        "assumption verified through",
        Cell::Int(b.assumption_verified_through),
    ));
    rows.push(row(
        "assumption holds",
        b.assumption.map_or(Cell::Missing, |a| Cell::Bool(a.holds)),
    ));
    Report::new(rows, json)
}
