//! One-line text form of an [`InvariantRecord`]:
//!
//! ```text
//! K(7/15) | cf=1+[-2,-8] | alex=4 - 7*t + 4*t^2 | sig_minkus=3 | sig=-2 | det=15 | genus=1 | guts=guts{-1/4} | fibered=false | kakimizu=0 | hfk=<hex> | mirrored=false
//! ```

use std::io::{BufRead, Write};

use bridgeguts::InvariantRecord;

use crate::{CliError, Result};

/// Field names after the leading knot, in line order.
pub const FIELDS: [&str; 11] = [
    "cf",
    "alex",
    "sig_minkus",
    "sig",
    "det",
    "genus",
    "guts",
    "fibered",
    "kakimizu",
    "hfk",
    "mirrored",
];

const SEP: &str = " | ";

pub(crate) fn cf_text(r: &InvariantRecord) -> String {
    let entries: Vec<String> = r.even_cf.entries.iter().map(|b| b.to_string()).collect();
    format!("{}+[{}]", r.even_cf.integer_part, entries.join(","))
}

/// Knot text followed by the values of [`FIELDS`].
pub(crate) fn field_values(r: &InvariantRecord) -> [String; 12] {
    [
        r.knot.to_string(),
        cf_text(r),
        r.alexander_normalized.to_string(),
        r.minkus_signature.to_string(),
        r.signature_standard.to_string(),
        r.determinant.to_string(),
        r.genus.to_string(),
        r.guts.to_string(),
        r.fibered.to_string(),
        r.kakimizu_dim.to_string(),
        hex::encode(&r.hfk_fingerprint),
        r.mirrored_for_minkus.to_string(),
    ]
}

pub fn format_record(r: &InvariantRecord) -> String {
    let v = field_values(r);
    let mut line = v[0].clone();
    for (name, value) in FIELDS.iter().zip(&v[1..]) {
        line.push_str(SEP);
        line.push_str(name);
        line.push('=');
        line.push_str(value);
    }
    line
}

fn parse_value<T: std::str::FromStr>(name: &str, value: &str) -> Result<T, String> {
    value.parse().map_err(|_| format!("bad {name} value {value:?}"))
}

/// Rebuilds a record from the knot text and the values of [`FIELDS`].
pub(crate) fn record_from_values(v: &[&str]) -> Result<InvariantRecord, String> {
    if v.len() != 12 {
        return Err(format!("expected 12 fields, found {}", v.len()));
    }
    Ok(InvariantRecord {
        knot: parse_value("knot", v[0])?,
        even_cf: parse_value("cf", v[1])?,
        alexander_normalized: parse_value("alex", v[2])?,
        minkus_signature: parse_value("sig_minkus", v[3])?,
        signature_standard: parse_value("sig", v[4])?,
        determinant: parse_value("det", v[5])?,
        genus: parse_value("genus", v[6])?,
        guts: parse_value("guts", v[7])?,
        fibered: parse_value("fibered", v[8])?,
        kakimizu_dim: parse_value("kakimizu", v[9])?,
        hfk_fingerprint: hex::decode(v[10]).map_err(|e| format!("bad hfk value: {e}"))?,
        mirrored_for_minkus: parse_value("mirrored", v[11])?,
    })
}

pub fn parse_record(line: &str) -> Result<InvariantRecord, String> {
    let mut parts = line.trim_end_matches(['\r', '\n']).split(SEP);
    let mut values = vec![parts.next().unwrap_or_default()];
    for name in FIELDS {
        let part = parts.next().ok_or_else(|| format!("missing field {name}"))?;
        let value = part
            .strip_prefix(name)
            .and_then(|s| s.strip_prefix('='))
            .ok_or_else(|| format!("expected field {name}, found {part:?}"))?;
        values.push(value);
    }
    if let Some(extra) = parts.next() {
        return Err(format!("unexpected trailing field {extra:?}"));
    }
    record_from_values(&values)
}

/// Reads one record per non-blank line.
pub fn parse_records(reader: impl BufRead) -> Result<Vec<InvariantRecord>> {
    let mut out = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        out.push(parse_record(&line).map_err(|reason| CliError::Record { line: i + 1, reason })?);
    }
    Ok(out)
}

pub fn write_records(mut w: impl Write, records: &[InvariantRecord]) -> Result<()> {
    for r in records {
        writeln!(w, "{}", format_record(r))?;
    }
    Ok(())
}
