//! Knot Floer homology ranks of alternating knots.
//!
//! For an alternating knot with symmetric Alexander polynomial `Σ a_s t^s` and
//! signature `σ`, the group in Alexander grading `s` has rank `|a_s|` and is
//! supported in Maslov grading `s + σ/2`.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};

use crate::alexander::minkus_alexander;
use crate::error::{Error, Result};
use crate::num::{even_cf_expand, LaurentPoly};
use crate::seifert::{seifert_matrix, signature_standard};
use crate::two_bridge::{canonicalize, mirror, TwoBridgeKnot};

/// An integer or half-integer grading, stored doubled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfInt(i64);

impl HalfInt {
    pub fn from_doubled(twice: i64) -> Self {
        HalfInt(twice)
    }

    pub fn from_int(n: i64) -> Self {
        HalfInt(2 * n)
    }

    pub fn doubled(&self) -> i64 {
        self.0
    }

    pub fn is_integral(&self) -> bool {
        self.0 % 2 == 0
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integral() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HfkEntry {
    pub alexander: i64,
    pub maslov: HalfInt,
    pub rank: BigUint,
}

/// Nonzero groups of `HFK^`, one per Alexander grading, in descending order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HfkTable {
    entries: Vec<HfkEntry>,
}

impl HfkTable {
    /// Sorts entries by descending Alexander grading.
    pub fn from_entries(mut entries: Vec<HfkEntry>) -> Self {
        entries.sort_by_key(|e| core::cmp::Reverse(e.alexander));
        HfkTable { entries }
    }

    pub fn entries(&self) -> &[HfkEntry] {
        &self.entries
    }

    pub fn total_rank(&self) -> BigUint {
        self.entries.iter().map(|e| &e.rank).sum()
    }

    pub fn rank_at(&self, s: i64) -> BigUint {
        self.entries
            .iter()
            .find(|e| e.alexander == s)
            .map(|e| e.rank.clone())
            .unwrap_or_default()
    }
}

/// One line per entry: `s=<s> m=<maslov> rank=<r>`.
impl fmt::Display for HfkTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            write!(f, "s={} m={} rank={}", e.alexander, e.maslov, e.rank)?;
        }
        Ok(())
    }
}

pub fn hfk_alternating(delta_symmetric: &LaurentPoly, sigma: i64) -> Result<HfkTable> {
    if !delta_symmetric.is_symmetric() || delta_symmetric.value_at_one() != BigInt::from(1) {
        return Err(Error::NotSymmetric);
    }
    if sigma % 2 != 0 {
        return Err(Error::OddSignature(sigma));
    }
    let entries = delta_symmetric
        .terms()
        .map(|(s, a)| HfkEntry {
            alexander: s,
            maslov: HalfInt::from_doubled(2 * s + sigma),
            rank: a.abs().to_biguint().expect("absolute value"),
        })
        .collect();
    Ok(HfkTable::from_entries(entries))
}

/// Symmetrized Alexander polynomial of `k`, from the Minkus sum of `k` or of
/// its mirror when the isotopy class has no odd-`p` member. The flag reports
/// which one was used.
pub fn symmetric_alexander(k: &TwoBridgeKnot) -> Result<(LaurentPoly, bool)> {
    let c = canonicalize(k);
    let (source, mirrored) = if c.p() % 2 == 1 { (c, false) } else { (mirror(&c), true) };
    Ok((minkus_alexander(&source)?.normalize_symmetric()?, mirrored))
}

/// Classical signature of `k` from the Seifert form of its plumbing.
pub fn knot_signature(k: &TwoBridgeKnot) -> Result<i64> {
    let cf = even_cf_expand(&k.slope())?;
    signature_standard(&seifert_matrix(&cf)?)
}

pub fn hfk_of_two_bridge(k: &TwoBridgeKnot) -> Result<HfkTable> {
    let (delta, _) = symmetric_alexander(k)?;
    hfk_alternating(&delta, knot_signature(k)?)
}

/// Canonical byte string of a table: `s:m2:rank;` per entry, entries in
/// descending Alexander grading, `m2` the doubled Maslov grading.
pub fn hfk_fingerprint(table: &HfkTable) -> Vec<u8> {
    let mut entries: Vec<&HfkEntry> = table.entries.iter().filter(|e| !e.rank.is_zero()).collect();
    entries.sort_by(|a, b| b.alexander.cmp(&a.alexander).then(a.maslov.cmp(&b.maslov)));
    let mut out = Vec::new();
    for e in entries {
        out.extend_from_slice(format!("{}:{}:{};", e.alexander, e.maslov.doubled(), e.rank).as_bytes());
    }
    out
}
