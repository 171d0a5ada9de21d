//! Executes a validated [`RunConfig`].

use std::fmt::Write as _;
use std::io::Write;

use casimir_core::contributions::{
    assumption_check, b2_integral, b2_prefactor, b3_integral_bound, b3_prefactor,
    casimir_energy_with, elliptic_contribution, elliptic_contribution_quadrature,
    hyperbolic_contribution, identity_interval, identity_quadrature, identity_series,
    tail_b2_bound, tail_b3_bound, EnergyOptions, LengthSpectrum, OrbifoldSignature, Provenance,
    TailBounds, STATED_TAIL_TOTAL,
};
use casimir_core::sum::neumaier_sum;
use casimir_core::triangle::{
    table_corpus, to_spectrum, EnumeratedClass, GeodesicClass, TABLE_ROWS,
};
use serde::Serialize;
use serde_json::{json, Value};

use crate::config::{CommandKind, RunConfig, SignatureSpec, SpectrumSource};
use crate::error::{CliError, Result};
use crate::format::{fmt_f64, json_f64};
use crate::parallel::{enumerate_parallel, tail_b1_parallel, with_pool};
use crate::report::{energy_report, provenance_name, row, row_with_bound, Cell, Report};
use crate::spectrum_io::{read_spectrum, write_spectrum};

/// Runs the command and writes its report to `out`.
pub fn run(config: &RunConfig, out: &mut dyn Write) -> Result<()> {
    build_report(config)?.emit(config.output, out)
}

pub fn build_report(config: &RunConfig) -> Result<Report> {
    config.validate()?;
    match config.command {
        CommandKind::Energy => energy(config),
        CommandKind::Elliptic => elliptic(config),
        CommandKind::Identity => identity(config),
        CommandKind::Hyperbolic => hyperbolic(config),
        CommandKind::Spectrum => spectrum(config),
        CommandKind::Tail => tail(config),
        CommandKind::Verify237 => verify_237(config),
    }
}

fn signature(config: &RunConfig) -> Result<OrbifoldSignature> {
    let sig = match &config.signature {
        Some(SignatureSpec::Triangle(p, q, r)) => OrbifoldSignature::triangle(*p, *q, *r)?,
        Some(SignatureSpec::Cones { orders, volume }) if orders.is_empty() => {
            OrbifoldSignature::cone_free(*volume)?
        }
        Some(SignatureSpec::Cones { orders, volume }) => {
            let names: Vec<String> = orders.iter().map(u32::to_string).collect();
            OrbifoldSignature::new(
                orders.clone(),
                *volume,
                format!("cones({})", names.join(",")),
            )?
        }
        None => return Err(CliError::Usage("a signature is required".into())),
    };
    Ok(sig)
}

/// A class as listed by the `spectrum` command.
#[derive(Debug, Serialize)]
struct ClassRecord {
    word: String,
    trace: Value,
    length: Value,
    s: u8,
    contribution: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    duplicate_of: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    power_of: Option<(usize, u32)>,
}

impl ClassRecord {
    fn new(c: &GeodesicClass) -> ClassRecord {
        ClassRecord {
            word: c.representative.to_string(),
            trace: json_f64(c.trace),
            length: json_f64(c.length),
            s: c.s,
            contribution: json_f64(c.contribution),
            duplicate_of: None,
            power_of: None,
        }
    }

    fn enumerated(c: &EnumeratedClass) -> ClassRecord {
        ClassRecord {
            duplicate_of: c.duplicate_of,
            power_of: c.power_of,
            ..ClassRecord::new(&c.class)
        }
    }
}

struct LoadedSpectrum {
    spectrum: LengthSpectrum,
    classes: Option<Vec<ClassRecord>>,
    excluded_non_hyperbolic: Option<usize>,
}

fn load_spectrum(source: &SpectrumSource) -> Result<LoadedSpectrum> {
    match source {
        SpectrumSource::Table => {
            let corpus = table_corpus()?;
            Ok(LoadedSpectrum {
                spectrum: to_spectrum(&corpus, Provenance::TableCorpus),
                classes: Some(corpus.iter().map(ClassRecord::new).collect()),
                excluded_non_hyperbolic: None,
            })
        }
        SpectrumSource::Enumerate(n) => {
            let e = with_pool(|| enumerate_parallel(*n))??;
            Ok(LoadedSpectrum {
                spectrum: to_spectrum(&e.distinct(), Provenance::Enumerated),
                classes: Some(e.classes.iter().map(ClassRecord::enumerated).collect()),
                excluded_non_hyperbolic: Some(e.excluded_non_hyperbolic),
            })
        }
        SpectrumSource::File(path) => Ok(LoadedSpectrum {
            spectrum: read_spectrum(path)?,
            classes: None,
            excluded_non_hyperbolic: None,
        }),
    }
}

fn energy_options(config: &RunConfig) -> EnergyOptions {
    EnergyOptions {
        outer_terms: config.terms,
        n_tail_tol: config.n_tail_tol,
        tail_j_lo: config.tail_j_lo,
        tail_j_hi: config.tail_j_hi,
    }
}

fn energy(config: &RunConfig) -> Result<Report> {
    let sig = signature(config)?;
    let loaded = load_spectrum(&config.spectrum_source)?;
    let opts = energy_options(config);
    let b = with_pool(|| casimir_energy_with(&sig, &loaded.spectrum, &opts, tail_b1_parallel))??;
    Ok(energy_report(&b, &sig.cone_orders, &loaded.spectrum))
}

fn elliptic(config: &RunConfig) -> Result<Report> {
    let sig = signature(config)?;
    let series = elliptic_contribution(&sig, config.terms)?;
    let quad = elliptic_contribution_quadrature(&sig)?;
    let json = json!({
        "signature": { "label": sig.label, "cone_orders": sig.cone_orders, "volume": json_f64(sig.volume) },
        "value": json_f64(series.value),
        "bound": json_f64(series.truncation_bound),
        "terms": series.terms,
        "quadrature": { "value": json_f64(quad.value), "est_error": json_f64(quad.est_error) },
        "difference": json_f64(series.value - quad.value),
    });
    let rows = vec![
        row("signature", Cell::Text(sig.label.clone())),
        row_with_bound("elliptic", series.value, series.truncation_bound),
        row("terms", Cell::Int(series.terms as u64)),
        row_with_bound("quadrature", quad.value, quad.est_error),
        row("difference", Cell::Num(series.value - quad.value)),
    ];
    Ok(Report::new(rows, json))
}

fn identity(config: &RunConfig) -> Result<Report> {
    let sig = signature(config)?;
    let series = identity_series(sig.volume, config.terms)?;
    let (lo, hi) = identity_interval(sig.volume);
    let quad = identity_quadrature(sig.volume)?;
    let inside = lo < series.value && series.value < hi;
    let json = json!({
        "volume": json_f64(sig.volume),
        "value": json_f64(series.value),
        "bound": json_f64(series.truncation_bound),
        "interval": [json_f64(lo), json_f64(hi)],
        "inside_interval": inside,
        "quadrature": { "value": json_f64(quad.value), "est_error": json_f64(quad.est_error) },
    });
    let rows = vec![
        row("volume", Cell::Num(sig.volume)),
        row_with_bound("identity", series.value, series.truncation_bound),
        row("interval lo", Cell::Num(lo)),
        row("interval hi", Cell::Num(hi)),
        row("inside interval", Cell::Bool(inside)),
        row_with_bound("quadrature", quad.value, quad.est_error),
    ];
    Ok(Report::new(rows, json))
}

fn hyperbolic(config: &RunConfig) -> Result<Report> {
    let loaded = load_spectrum(&config.spectrum_source)?;
    let spec = &loaded.spectrum;
    let h = hyperbolic_contribution(spec, config.n_tail_tol)?;
    let a = assumption_check(spec, 1);
    let violation = a.first_violation.map_or(Value::Null, |v| {
        json!({ "index": v.index, "length": json_f64(v.length), "threshold": json_f64(v.threshold) })
    });
    let json = json!({
        "spectrum": {
            "provenance": provenance_name(spec.provenance()),
            "distinct_lengths": spec.len(),
            "total_multiplicity": spec.total_multiplicity(),
        },
        "value": json_f64(h.value),
        "bound": json_f64(h.truncation_bound),
        "eval_error": json_f64(h.eval_error),
        "assumption": {
            "holds": a.holds,
            "verified_through": a.verified_through,
            "skipped": a.skipped,
            "first_violation": violation,
        },
    });
    let mut rows = vec![
        row(
            "spectrum",
            Cell::Text(provenance_name(spec.provenance()).to_string()),
        ),
        row(
            "spectrum multiplicity",
            Cell::Int(spec.total_multiplicity()),
        ),
        row_with_bound("hyperbolic", h.value, h.truncation_bound),
        row("evaluation error", Cell::Num(h.eval_error)),
        row("assumption holds", Cell::Bool(a.holds)),
        row("assumption verified through", Cell::Int(a.verified_through)),
    ];
    if let Some(v) = a.first_violation {
        rows.push(row("first violation index", Cell::Int(v.index)));
        rows.push(row("first violation length", Cell::Num(v.length)));
        rows.push(row("first violation threshold", Cell::Num(v.threshold)));
    }
    Ok(Report::new(rows, json))
}

fn spectrum(config: &RunConfig) -> Result<Report> {
    let loaded = load_spectrum(&config.spectrum_source)?;
    let spec = &loaded.spectrum;
    let mut text = String::new();
    match &loaded.classes {
        Some(classes) => {
            let _ = writeln!(
                text,
                "{:<24} {:>14} {:>2} {:>16}  note",
                "word", "length", "s", "contribution"
            );
            for c in classes {
                let note = match (c.duplicate_of, c.power_of) {
                    (Some(d), _) => format!("same trace as #{d}"),
                    (None, Some((j, k))) => format!("{k} x length of #{j}"),
                    (None, None) => String::new(),
                };
                let (len, contrib) = (c.length.to_string(), c.contribution.to_string());
                let _ = writeln!(
                    text,
                    "{:<24} {:>14} {:>2} {:>16}  {}",
                    c.word,
                    len,
                    c.s,
                    contrib,
                    note.trim_end()
                );
            }
        }
        None => {
            for e in spec.entries() {
                let _ = writeln!(text, "{} {}", fmt_f64(e.length), e.multiplicity);
            }
        }
    }
    let text = text
        .lines()
        .map(str::trim_end)
        .collect::<Vec<_>>()
        .join("\n")
        + "\n";
    let entries: Vec<Value> = spec
        .entries()
        .iter()
        .map(|e| json!({ "length": json_f64(e.length), "multiplicity": e.multiplicity }))
        .collect();
    let json = json!({
        "provenance": provenance_name(spec.provenance()),
        "distinct_lengths": spec.len(),
        "total_multiplicity": spec.total_multiplicity(),
        "excluded_non_hyperbolic": loaded.excluded_non_hyperbolic,
        "entries": entries,
        "classes": loaded.classes,
    });
    Ok(Report {
        rows: Vec::new(),
        json,
        raw_text: Some(text),
        raw_csv: Some(write_spectrum(spec)),
    })
}

fn tail_rows_and_json(t: &TailBounds, j_lo: u64, j_hi: u64) -> (Vec<crate::report::Row>, Value) {
    let json = json!({
        "j_lo": j_lo,
        "j_hi": j_hi,
        "b1": json_f64(t.b1),
        "b2": json_f64(t.b2),
        "b3": json_f64(t.b3),
        "total": json_f64(t.total()),
        "stated_total": json_f64(STATED_TAIL_TOTAL),
        "constants": {
            "b2_prefactor": json_f64(b2_prefactor(j_hi)),
            "b2_integral": json_f64(b2_integral(j_hi)),
            "b3_prefactor": json_f64(b3_prefactor(j_lo)),
            "b3_integral": json_f64(b3_integral_bound(j_lo)),
        },
    });
    let rows = vec![
        row("j_lo", Cell::Int(j_lo)),
        row("j_hi", Cell::Int(j_hi)),
        row("b1", Cell::Num(t.b1)),
        row("b2", Cell::Num(t.b2)),
        row("b3", Cell::Num(t.b3)),
        row("total", Cell::Num(t.total())),
        row("stated total", Cell::Num(STATED_TAIL_TOTAL)),
        row("b2 prefactor", Cell::Num(b2_prefactor(j_hi))),
        row("b2 integral", Cell::Num(b2_integral(j_hi))),
        row("b3 prefactor", Cell::Num(b3_prefactor(j_lo))),
        row("b3 integral", Cell::Num(b3_integral_bound(j_lo))),
    ];
    (rows, json)
}

fn tail(config: &RunConfig) -> Result<Report> {
    let (j_lo, j_hi) = (config.tail_j_lo, config.tail_j_hi);
    let b1 = with_pool(|| tail_b1_parallel(j_lo, j_hi))??;
    let t = TailBounds {
        b1,
        b2: tail_b2_bound(j_hi)?,
        b3: tail_b3_bound(j_lo)?,
    };
    let (rows, json) = tail_rows_and_json(&t, j_lo, j_hi);
    Ok(Report::new(rows, json))
}

fn verify_237(config: &RunConfig) -> Result<Report> {
    let config = RunConfig {
        signature: Some(SignatureSpec::Triangle(2, 3, 7)),
        spectrum_source: SpectrumSource::Table,
        ..config.clone()
    };
    let mut report = energy(&config)?;
    let printed_total = neumaier_sum(TABLE_ROWS.iter().map(|r| r.contribution));
    let recomputed = report.json["hyperbolic"]["tail_bound"].clone();
    let bound = report.json["certified_lower_bound"].clone();
    let stated_bound = report.json["stated_tail"]["certified_lower_bound"].clone();
    report.json["comparison"] = json!({
        "table_printed_total": json_f64(printed_total),
        "tail_total": { "recomputed": recomputed, "stated": json_f64(STATED_TAIL_TOTAL) },
        "certified_lower_bound": { "recomputed_tail": bound, "stated_tail": stated_bound },
    });
    report
        .rows
        .push(row("table printed total", Cell::Num(printed_total)));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::path::PathBuf;

    fn config(command: CommandKind) -> RunConfig {
        RunConfig {
            command,
            ..RunConfig::default()
        }
    }

    #[test]
    fn identity_report() {
        let c = RunConfig {
            signature: Some(SignatureSpec::Cones {
                orders: vec![],
                volume: 0.149_599_6,
            }),
            ..config(CommandKind::Identity)
        };
        let r = build_report(&c).unwrap();
        assert_eq!(r.json["inside_interval"], Value::Bool(true));
    }

    #[test]
    fn cone_free_elliptic_is_zero() {
        let c = RunConfig {
            signature: Some(SignatureSpec::Cones {
                orders: vec![],
                volume: 4.0,
            }),
            ..config(CommandKind::Elliptic)
        };
        let r = build_report(&c).unwrap();
        assert_eq!(r.json["value"].to_string(), "0");
    }

    #[test]
    fn missing_file_is_io_error() {
        let c = RunConfig {
            spectrum_source: SpectrumSource::File(PathBuf::from("/nonexistent/spectrum.csv")),
            ..config(CommandKind::Spectrum)
        };
        let e = build_report(&c).err().unwrap();
        assert!(matches!(e, CliError::Io { .. }));
        assert_eq!(e.exit_code(), 2);
    }

    #[test]
    fn non_hyperbolic_triangle() {
        let c = RunConfig {
            signature: Some(SignatureSpec::Triangle(2, 3, 6)),
            ..config(CommandKind::Elliptic)
        };
        assert_eq!(build_report(&c).err().unwrap().exit_code(), 2);
    }
}
