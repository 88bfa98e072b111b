//! Per-knot invariant records and searches over them.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;

use crate::alexander::minkus_signature;
use crate::error::{Error, Result};
use crate::guts::{guts_of_two_bridge, kakimizu_dim_from_guts, GutsDescriptor};
use crate::hfk::{hfk_alternating, hfk_fingerprint, knot_signature, symmetric_alexander};
use crate::num::{even_cf_expand, EvenCF, LaurentPoly};
use crate::seifert::seifert_genus;
use crate::two_bridge::{canonicalize, enumerate_canonical, mirror, TwoBridgeKnot};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct InvariantRecord {
    pub knot: TwoBridgeKnot,
    pub even_cf: EvenCF,
    /// Unit-normalized: lowest exponent 0, positive constant term.
    pub alexander_normalized: LaurentPoly,
    pub minkus_signature: i64,
    pub signature_standard: i64,
    pub determinant: BigInt,
    pub genus: usize,
    pub guts: GutsDescriptor,
    pub fibered: bool,
    pub kakimizu_dim: usize,
    pub hfk_fingerprint: Vec<u8>,
    /// The Minkus quantities were computed on the mirror because the
    /// isotopy class of `knot` has no odd `p`.
    pub mirrored_for_minkus: bool,
}

impl InvariantRecord {
    pub fn compute(k: &TwoBridgeKnot) -> Result<Self> {
        let knot = canonicalize(k);
        let even_cf = even_cf_expand(&knot.slope())?;
        let (delta, mirrored) = symmetric_alexander(&knot)?;
        let minkus_source = if mirrored { mirror(&knot) } else { knot };
        let signature = knot_signature(&knot)?;
        let hfk = hfk_alternating(&delta, signature)?;
        let guts = guts_of_two_bridge(&knot)?;
        Ok(InvariantRecord {
            knot,
            genus: seifert_genus(&even_cf)?,
            even_cf,
            alexander_normalized: delta.normalize_units()?,
            minkus_signature: minkus_signature(&minkus_source)?,
            signature_standard: signature,
            determinant: delta.value_at_minus_one().magnitude().clone().into(),
            fibered: guts.is_empty(),
            kakimizu_dim: kakimizu_dim_from_guts(&guts),
            guts,
            hfk_fingerprint: hfk_fingerprint(&hfk),
            mirrored_for_minkus: mirrored,
        })
    }

    /// Checks the record's internal consistency rules.
    pub fn check(&self) -> bool {
        self.determinant == BigInt::from(self.knot.q())
            && self.kakimizu_dim == self.guts.len().max(1) - 1
            && self.fibered == self.guts.is_empty()
    }

    /// Canonical text of one invariant, used as a grouping key.
    pub fn key_text(&self, key: InvariantKey) -> String {
        match key {
            InvariantKey::Alexander => self.alexander_normalized.to_string(),
            InvariantKey::MinkusSignature => self.minkus_signature.to_string(),
            InvariantKey::SignatureStandard => self.signature_standard.to_string(),
            InvariantKey::Determinant => self.determinant.to_string(),
            InvariantKey::Genus => self.genus.to_string(),
            InvariantKey::Guts => self.guts.to_string(),
            InvariantKey::Fibered => self.fibered.to_string(),
            InvariantKey::KakimizuDim => self.kakimizu_dim.to_string(),
            InvariantKey::Hfk => self
                .hfk_fingerprint
                .iter()
                .map(|&b| b as char)
                .collect(),
        }
    }
}

/// Names of the invariants a record carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum InvariantKey {
    Alexander,
    MinkusSignature,
    SignatureStandard,
    Determinant,
    Genus,
    Guts,
    Fibered,
    KakimizuDim,
    Hfk,
}

impl InvariantKey {
    pub const ALL: [InvariantKey; 9] = [
        InvariantKey::Alexander,
        InvariantKey::MinkusSignature,
        InvariantKey::SignatureStandard,
        InvariantKey::Determinant,
        InvariantKey::Genus,
        InvariantKey::Guts,
        InvariantKey::Fibered,
        InvariantKey::KakimizuDim,
        InvariantKey::Hfk,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            InvariantKey::Alexander => "alexander",
            InvariantKey::MinkusSignature => "minkus_signature",
            InvariantKey::SignatureStandard => "signature_standard",
            InvariantKey::Determinant => "determinant",
            InvariantKey::Genus => "genus",
            InvariantKey::Guts => "guts",
            InvariantKey::Fibered => "fibered",
            InvariantKey::KakimizuDim => "kakimizu_dim",
            InvariantKey::Hfk => "hfk",
        }
    }
}

impl fmt::Display for InvariantKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for InvariantKey {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        InvariantKey::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::UnknownKey(s.to_string()))
    }
}

/// One record per knot of [`enumerate_canonical`], sorted by `(q, p)`.
pub fn build_catalog(q_max: u64) -> Result<Vec<InvariantRecord>> {
    enumerate_canonical(q_max).iter().map(InvariantRecord::compute).collect()
}

/// Two catalog knots and which invariants tell them apart.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistinguishedPair {
    pub first: TwoBridgeKnot,
    pub second: TwoBridgeKnot,
    pub shared: Vec<InvariantKey>,
    pub distinguishing: Vec<InvariantKey>,
}

impl DistinguishedPair {
    pub fn between(a: &InvariantRecord, b: &InvariantRecord) -> Self {
        let (a, b) = if a.knot <= b.knot { (a, b) } else { (b, a) };
        let (shared, distinguishing) = InvariantKey::ALL
            .into_iter()
            .partition(|&key| a.key_text(key) == b.key_text(key));
        DistinguishedPair {
            first: a.knot,
            second: b.knot,
            shared,
            distinguishing,
        }
    }
}

impl fmt::Display for DistinguishedPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |keys: &[InvariantKey]| keys.iter().map(|k| k.name()).collect::<Vec<_>>().join(",");
        write!(
            f,
            "{} {} | shared={} | distinguishing={}",
            self.first,
            self.second,
            join(&self.shared),
            join(&self.distinguishing)
        )
    }
}

/// Pairs with identical knot Floer homology but different guts, sorted by
/// `(q, p_first, p_second)`.
pub fn find_hfk_equal_guts_distinct(catalog: &[InvariantRecord]) -> Vec<DistinguishedPair> {
    let mut by_hfk: BTreeMap<(u64, &[u8]), Vec<&InvariantRecord>> = BTreeMap::new();
    for r in catalog {
        by_hfk
            .entry((r.knot.q(), &r.hfk_fingerprint[..]))
            .or_default()
            .push(r);
    }
    let mut pairs = Vec::new();
    for group in by_hfk.values() {
        for (i, a) in group.iter().enumerate() {
            for b in &group[i + 1..] {
                if a.guts != b.guts {
                    pairs.push(DistinguishedPair::between(a, b));
                }
            }
        }
    }
    pairs.sort_by_key(|p| (p.first.q(), p.first.p(), p.second.p()));
    pairs
}

/// Groups catalog knots by the canonical text of one invariant.
pub fn group_by(catalog: &[InvariantRecord], key: InvariantKey) -> BTreeMap<String, Vec<TwoBridgeKnot>> {
    let mut groups: BTreeMap<String, Vec<TwoBridgeKnot>> = BTreeMap::new();
    for r in catalog {
        groups.entry(r.key_text(key)).or_default().push(r.knot);
    }
    groups
}

/// [`group_by`] with the key given by name.
pub fn group_by_name(catalog: &[InvariantRecord], key: &str) -> Result<BTreeMap<String, Vec<TwoBridgeKnot>>> {
    Ok(group_by(catalog, key.parse()?))
}
