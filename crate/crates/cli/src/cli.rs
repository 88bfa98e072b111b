//! Argument definitions and command dispatch for the `bridgeguts` binary.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use bridgeguts::alexander::minkus_signature;
use bridgeguts::guts::{dehn_surgery_suture_slope, guts_of_two_bridge, kakimizu_max_simplex_dim};
use bridgeguts::hfk::{hfk_of_two_bridge, knot_signature, symmetric_alexander};
use bridgeguts::two_bridge::canonical_class;
use bridgeguts::{
    canonicalize, cf_eval, even_cf_expand, find_hfk_equal_guts_distinct, mirror, EvenCF,
    Fraction, InvariantRecord, TwoBridgeKnot,
};
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use crate::{build_catalog_parallel, write_csv, write_records, CliError, Result};

#[derive(Debug, Parser)]
#[command(name = "bridgeguts", version, about = "Invariants of 2-bridge knots K(p/q)")]
pub struct Cli {
    /// Output format for knot-valued commands.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Record,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Even continued fraction of a rational with odd denominator.
    Cf {
        #[arg(value_parser = parse_fraction, allow_hyphen_values = true)]
        x: RawFraction,
    },
    /// Value of an expansion, given as `r + [b1,...]` or as `r b1 b2 ...`.
    Eval {
        #[arg(required = true, allow_hyphen_values = true)]
        cf: Vec<String>,
    },
    /// Canonical representative of a knot's isotopy class.
    Canon { knot: KnotArg },
    /// All invariants of a knot.
    Invariants { knot: KnotArg },
    /// Symmetrized Alexander polynomial.
    Alexander { knot: KnotArg },
    /// Classical signature and the Minkus signature count.
    Signature { knot: KnotArg },
    /// Guts of the knot complement.
    Guts { knot: KnotArg },
    /// Knot Floer homology ranks and gradings.
    Hfk { knot: KnotArg },
    /// Dimension of a maximal simplex of the Kakimizu complex.
    Kakimizu { knot: KnotArg },
    /// Suture slope on the guts of q/p surgery.
    SurgerySlope {
        #[arg(allow_hyphen_values = true)]
        q: i64,
        #[arg(allow_hyphen_values = true)]
        p: i64,
    },
    /// Invariant records of every canonical knot with q <= q-max.
    Catalog {
        #[command(flatten)]
        range: Range,
        /// Write here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Knot pairs with equal knot Floer homology but different guts.
    Search {
        #[command(flatten)]
        range: Range,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, clap::Args)]
pub struct Range {
    #[arg(long, value_parser = clap::value_parser!(u64).range(3..))]
    pub q_max: u64,
    /// Worker threads (default: available parallelism).
    #[arg(long, value_parser = clap::value_parser!(u16).range(1..))]
    pub jobs: Option<u16>,
}

/// `<digits>/<digits>` with an optional leading `-`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawFraction {
    pub num: BigInt,
    pub den: BigInt,
}

pub fn parse_fraction(s: &str) -> Result<RawFraction, String> {
    let bad = || format!("expected <digits>/<digits>, got {s:?}");
    let (neg, body) = s.strip_prefix('-').map_or((false, s), |b| (true, b));
    let (n, d) = body.split_once('/').ok_or_else(bad)?;
    let digits = |t: &str| -> Result<BigInt, String> {
        if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        t.parse().map_err(|_| bad())
    };
    let num = digits(n)?;
    Ok(RawFraction {
        num: if neg { -num } else { num },
        den: digits(d)?,
    })
}

/// A knot argument `p/q`; validated when the command runs so that bad
/// knots are domain errors rather than usage errors.
#[derive(Debug, Clone)]
pub struct KnotArg(RawFraction);

impl std::str::FromStr for KnotArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        parse_fraction(s).map(KnotArg)
    }
}

impl KnotArg {
    pub fn knot(&self) -> Result<TwoBridgeKnot> {
        let small = |v: &BigInt| i64::try_from(v).map_err(|_| CliError::Usage(format!("{v} is out of range")));
        Ok(TwoBridgeKnot::new(small(&self.0.num)?, small(&self.0.den)?)?)
    }
}

fn parse_eval_input(words: &[String]) -> Result<EvenCF> {
    let joined = words.join(" ");
    if joined.contains('[') {
        return Ok(joined.parse()?);
    }
    let mut ints = words.iter().map(|w| {
        w.parse::<BigInt>()
            .map_err(|_| CliError::Usage(format!("expected an integer, got {w:?}")))
    });
    let integer_part = ints.next().transpose()?.unwrap_or_default();
    Ok(EvenCF {
        integer_part,
        entries: ints.collect::<Result<_>>()?,
    })
}

fn emit_record(out: &mut dyn Write, format: Format, record: &InvariantRecord) -> Result<()> {
    match format {
        Format::Csv => write_csv(out, std::slice::from_ref(record)),
        _ => write_records(out, std::slice::from_ref(record)),
    }
}

fn write_invariants_text(out: &mut dyn Write, r: &InvariantRecord) -> Result<()> {
    writeln!(out, "knot: {}", r.knot)?;
    writeln!(out, "continued fraction: {}", r.even_cf)?;
    writeln!(out, "alexander: {}", r.alexander_normalized)?;
    writeln!(out, "signature: {}", r.signature_standard)?;
    writeln!(out, "minkus signature: {}", r.minkus_signature)?;
    writeln!(out, "determinant: {}", r.determinant)?;
    writeln!(out, "genus: {}", r.genus)?;
    writeln!(out, "guts: {}", r.guts)?;
    writeln!(out, "fibered: {}", r.fibered)?;
    writeln!(out, "kakimizu dim: {}", r.kakimizu_dim)?;
    writeln!(out, "hfk: {}", fingerprint_text(&r.hfk_fingerprint))?;
    writeln!(out, "mirrored for minkus: {}", r.mirrored_for_minkus)?;
    Ok(())
}

fn fingerprint_text(bytes: &[u8]) -> String {
    if bytes.is_empty() {
        "-".into()
    } else {
        String::from_utf8_lossy(bytes).into_owned()
    }
}

fn write_catalog_text(out: &mut dyn Write, records: &[InvariantRecord]) -> Result<()> {
    for r in records {
        writeln!(
            out,
            "{:<10} det={:<4} sig={:<3} genus={:<2} {} alex={}",
            r.knot.to_string(),
            r.determinant,
            r.signature_standard,
            r.genus,
            r.guts,
            r.alexander_normalized
        )?;
    }
    Ok(())
}

/// Runs one command, writing its output to `out` unless the command has
/// its own `--out` path.
pub fn run(cli: Cli, out: &mut dyn Write) -> Result<()> {
    let format = cli.format;
    match cli.command {
        Command::Cf { x } => {
            let cf = even_cf_expand(&Fraction::new(x.num, x.den)?)?;
            writeln!(out, "{cf}")?;
        }
        Command::Eval { cf } => writeln!(out, "{}", cf_eval(&parse_eval_input(&cf)?)?)?,
        Command::Canon { knot } => {
            let class = canonical_class(&knot.knot()?);
            let members: Vec<String> = class.members.iter().map(u64::to_string).collect();
            writeln!(out, "{} {{{}}}", class.representative, members.join(", "))?;
        }
        Command::SurgerySlope { q, p } => writeln!(out, "{}", dehn_surgery_suture_slope(q, p)?)?,
        Command::Catalog { range, out: path } => {
            let records = build_catalog_parallel(range.q_max, range.jobs.map(usize::from))?;
            with_output(path, out, |w| match format {
                Format::Text => write_catalog_text(w, &records),
                Format::Record => write_records(w, &records),
                Format::Csv => write_csv(w, &records),
            })?;
        }
        Command::Search { range, out: path } => {
            let records = build_catalog_parallel(range.q_max, range.jobs.map(usize::from))?;
            let pairs = find_hfk_equal_guts_distinct(&records);
            with_output(path, out, |w| {
                if format == Format::Text {
                    for pair in &pairs {
                        writeln!(w, "{pair}")?;
                    }
                    return Ok(());
                }
                let members: Vec<InvariantRecord> = pairs
                    .iter()
                    .flat_map(|pair| [pair.first, pair.second])
                    .map(|k| records.iter().find(|r| r.knot == k).cloned().expect("pair member in catalog"))
                    .collect();
                match format {
                    Format::Csv => write_csv(w, &members),
                    _ => write_records(w, &members),
                }
            })?;
        }
        Command::Invariants { knot }
        | Command::Alexander { knot }
        | Command::Signature { knot }
        | Command::Guts { knot }
        | Command::Hfk { knot }
        | Command::Kakimizu { knot }
            if format != Format::Text =>
        {
            emit_record(out, format, &InvariantRecord::compute(&knot.knot()?)?)?;
        }
        Command::Invariants { knot } => write_invariants_text(out, &InvariantRecord::compute(&knot.knot()?)?)?,
        Command::Alexander { knot } => writeln!(out, "{}", symmetric_alexander(&knot.knot()?)?.0)?,
        Command::Signature { knot } => {
            let k = knot.knot()?;
            let (_, mirrored) = symmetric_alexander(&k)?;
            let c = canonicalize(&k);
            let minkus = minkus_signature(&if mirrored { mirror(&c) } else { c })?;
            writeln!(out, "signature: {}", knot_signature(&k)?)?;
            writeln!(out, "minkus signature: {minkus}{}", if mirrored { " (of the mirror)" } else { "" })?;
        }
        Command::Guts { knot } => writeln!(out, "{}", guts_of_two_bridge(&knot.knot()?)?)?,
        Command::Hfk { knot } => writeln!(out, "{}", hfk_of_two_bridge(&knot.knot()?)?)?,
        Command::Kakimizu { knot } => writeln!(out, "{}", kakimizu_max_simplex_dim(&knot.knot()?)?)?,
    }
    Ok(())
}

fn with_output(
    path: Option<PathBuf>,
    stdout: &mut dyn Write,
    f: impl FnOnce(&mut dyn Write) -> Result<()>,
) -> Result<()> {
    match path {
        Some(path) => {
            let mut w = BufWriter::new(File::create(path)?);
            f(&mut w)?;
            w.flush()?;
            Ok(())
        }
        None => f(stdout),
    }
}
