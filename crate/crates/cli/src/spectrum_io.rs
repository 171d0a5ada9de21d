//! Plain-text length spectra: one `length,multiplicity` record per line,
//! `#` starts a comment.

use std::fmt::Write as _;
use std::path::Path;

use casimir_core::contributions::{LengthSpectrum, Provenance, SpectrumEntry};

use crate::error::{CliError, Result};

pub fn parse_spectrum(text: &str) -> Result<LengthSpectrum> {
    // Cut comments line by line so line numbers stay aligned.
    let stripped: String = text
        .lines()
        .map(|l| l.split_once('#').map_or(l, |(head, _)| head))
        .flat_map(|l| [l, "\n"])
        .collect();
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .flexible(true)
        .from_reader(stripped.as_bytes());
    let mut entries = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| CliError::SpectrumFile {
            line: e.position().map_or(0, |p| p.line()),
            message: e.to_string(),
        })?;
        let line = record.position().map_or(0, |p| p.line());
        let bad = |message: String| CliError::SpectrumFile { line, message };
        if record.iter().all(str::is_empty) {
            continue;
        }
        if record.len() != 2 {
            return Err(bad(format!(
                "expected `length,multiplicity`, found {} fields",
                record.len()
            )));
        }
        if &record[0] == "length" && &record[1] == "multiplicity" {
            continue;
        }
        let length: f64 = record[0]
            .parse()
            .map_err(|_| bad(format!("bad length `{}`", &record[0])))?;
        let multiplicity: u32 = record[1]
            .parse()
            .map_err(|_| bad(format!("bad multiplicity `{}`", &record[1])))?;
        if !(length > 0.0 && length.is_finite()) {
            return Err(bad(format!("length must be positive, found {length}")));
        }
        if multiplicity == 0 {
            return Err(bad("multiplicity must be at least 1".into()));
        }
        entries.push(SpectrumEntry::new(length, multiplicity));
    }
    Ok(LengthSpectrum::new(entries, Provenance::File)?)
}

pub fn read_spectrum(path: &Path) -> Result<LengthSpectrum> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_spectrum(&text)
}

/// Lengths are written in shortest round-trip form so that reading the
/// output back gives the same spectrum.
pub fn write_spectrum(spec: &LengthSpectrum) -> String {
    let mut out = String::new();
    for e in spec.entries() {
        let _ = writeln!(out, "{},{}", e.length, e.multiplicity);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn comments_headers_and_blank_lines() {
        let text = "# table\nlength,multiplicity\n\n2.5, 2\n0.98 ,1 # systole\n";
        let s = parse_spectrum(text).unwrap();
        assert_eq!(s.len(), 2);
        assert_eq!(s.entries()[0].length, 0.98);
        assert_eq!(s.total_multiplicity(), 3);
    }

    #[test]
    fn errors_name_the_line() {
        let err = parse_spectrum("1.0,1\n2.0,x\n").unwrap_err();
        assert!(
            matches!(err, CliError::SpectrumFile { line: 2, .. }),
            "{err}"
        );
        assert!(parse_spectrum("-1.0,1\n").is_err());
        assert!(parse_spectrum("1.0,0\n").is_err());
        assert!(parse_spectrum("1.0\n").is_err());
    }

    #[test]
    fn round_trip() {
        let s = parse_spectrum("0.983986562181,1\n1.7360057508,1\n").unwrap();
        let back = parse_spectrum(&write_spectrum(&s)).unwrap();
        assert_eq!(s, back);
    }
}
