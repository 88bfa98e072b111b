//! Comma-separated export with a header row of record field names.

use std::io::{Read, Write};

use bridgeguts::InvariantRecord;
use csv::{QuoteStyle, ReaderBuilder, WriterBuilder};

use crate::record::{field_values, record_from_values, FIELDS};
use crate::{CliError, Result};

fn header() -> Vec<&'static str> {
    std::iter::once("knot").chain(FIELDS).collect()
}

/// Text fields (knot, polynomial, expansion, guts, booleans, hex) are quoted.
pub fn write_csv(w: impl Write, records: &[InvariantRecord]) -> Result<()> {
    let mut out = WriterBuilder::new().quote_style(QuoteStyle::NonNumeric).from_writer(w);
    out.write_record(header())?;
    for r in records {
        out.write_record(field_values(r))?;
    }
    out.flush()?;
    Ok(())
}

pub fn read_csv(r: impl Read) -> Result<Vec<InvariantRecord>> {
    let mut reader = ReaderBuilder::new().from_reader(r);
    if reader.headers()?.iter().ne(header()) {
        return Err(CliError::Record {
            line: 1,
            reason: "unexpected csv header".into(),
        });
    }
    let mut out = Vec::new();
    for (i, row) in reader.records().enumerate() {
        let row = row?;
        let values: Vec<&str> = row.iter().collect();
        out.push(record_from_values(&values).map_err(|reason| CliError::Record { line: i + 2, reason })?);
    }
    Ok(out)
}
