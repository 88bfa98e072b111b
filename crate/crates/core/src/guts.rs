//! Guts of 2-bridge knot complements.
//!
//! Cutting the complement of `K(p/q)` along a maximal family of disjoint
//! minimal-genus Seifert surfaces leaves one piece per band of the plumbing
//! `p/q = r + [b_1, ..., b_k]`. A band with two half-twists leaves a product
//! piece; a band with `b` half-twists, `|b| > 2`, leaves a solid torus with two
//! sutures of slope `2/b`. Only the slopes are recorded, which determines
//! these pieces completely.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::num::{even_cf_expand, Fraction};
use crate::two_bridge::{canonicalize, TwoBridgeKnot};

/// A solid torus with two parallel sutures of the given slope.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SuturedSolidTorus {
    pub slope: Fraction,
}

impl SuturedSolidTorus {
    pub fn new(slope: Fraction) -> Self {
        SuturedSolidTorus { slope }
    }
}

impl Ord for SuturedSolidTorus {
    fn cmp(&self, other: &Self) -> Ordering {
        self.slope
            .cmp(&other.slope)
            .then_with(|| self.slope.denom().cmp(other.slope.denom()))
    }
}

impl PartialOrd for SuturedSolidTorus {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Multiset of guts components, kept sorted so that equality is multiset
/// equality. Empty for fibered knots.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GutsDescriptor {
    components: Vec<SuturedSolidTorus>,
}

impl GutsDescriptor {
    pub fn new(mut components: Vec<SuturedSolidTorus>) -> Self {
        components.sort();
        GutsDescriptor { components }
    }

    pub fn from_slopes(slopes: impl IntoIterator<Item = Fraction>) -> Self {
        Self::new(slopes.into_iter().map(SuturedSolidTorus::new).collect())
    }

    pub fn components(&self) -> &[SuturedSolidTorus] {
        &self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }
}

impl fmt::Display for GutsDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("guts{")?;
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", c.slope)?;
        }
        f.write_str("}")
    }
}

impl core::str::FromStr for GutsDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s
            .strip_prefix("guts{")
            .and_then(|r| r.strip_suffix('}'))
            .ok_or_else(|| Error::Parse(alloc::string::ToString::to_string(s)))?;
        if body.trim().is_empty() {
            return Ok(GutsDescriptor::default());
        }
        let slopes = body
            .split(',')
            .map(|t| t.trim().parse::<Fraction>())
            .collect::<Result<Vec<_>>>()?;
        Ok(GutsDescriptor::from_slopes(slopes))
    }
}

/// Guts of the complement of a band with `b` half-twists.
pub fn band_complement_guts(b: &BigInt) -> Result<Option<SuturedSolidTorus>> {
    if b.is_zero() || b.is_odd() {
        return Err(Error::InvalidBand(b.clone()));
    }
    if b.abs() == BigInt::from(2) {
        return Ok(None);
    }
    Ok(Some(SuturedSolidTorus::new(Fraction::new(2, b.clone())?)))
}

pub fn guts_of_two_bridge(k: &TwoBridgeKnot) -> Result<GutsDescriptor> {
    let k = canonicalize(k);
    let cf = even_cf_expand(&k.slope())?;
    let mut pieces = Vec::new();
    for b in &cf.entries {
        if let Some(piece) = band_complement_guts(b)? {
            pieces.push(piece);
        }
    }
    Ok(GutsDescriptor::new(pieces))
}

pub fn is_fibered(k: &TwoBridgeKnot) -> Result<bool> {
    Ok(guts_of_two_bridge(k)?.is_empty())
}

/// Dimension of a maximal simplex in the Kakimizu complex: one less than the
/// number of guts components, and 0 for fibered knots.
pub fn kakimizu_max_simplex_dim(k: &TwoBridgeKnot) -> Result<usize> {
    Ok(kakimizu_dim_from_guts(&guts_of_two_bridge(k)?))
}

pub fn kakimizu_dim_from_guts(guts: &GutsDescriptor) -> usize {
    guts.len().max(1) - 1
}

/// A longitude `(r, s)` with `qs - pr = 1` for the surgery slope `q/p`.
pub fn surgery_witness(q: i64, p: i64) -> Result<(BigInt, BigInt)> {
    if q.unsigned_abs() < 2 {
        return Err(Error::SurgeryDenominatorTooSmall(q));
    }
    let e = BigInt::from(q).extended_gcd(&BigInt::from(p));
    if !e.gcd.abs().eq(&BigInt::from(1)) {
        return Err(Error::SurgeryNotCoprime {
            q,
            p,
            gcd: i64::try_from(e.gcd.abs()).unwrap_or(i64::MAX),
        });
    }
    // e.gcd = q·x + p·y = ±1; pick signs so that q·s - p·r = 1
    let sign = e.gcd.signum();
    Ok((-(e.y * &sign), e.x * sign))
}

/// Suture slope `-r/q` read modulo 1, in `[0, 1)`.
pub fn suture_slope_from_witness(q: i64, r: &BigInt) -> Result<Fraction> {
    Ok(Fraction::new(-r, q)?.fract())
}

/// Slope of the two sutures on the solid torus filled along `q·m + p·l`.
///
/// The longitude `(r, s)` is only determined up to `(r + qt, s + pt)`, which
/// shifts `-r/q` by an integer, so the slope is reported in `[0, 1)`.
pub fn dehn_surgery_suture_slope(q: i64, p: i64) -> Result<Fraction> {
    let (r, _) = surgery_witness(q, p)?;
    suture_slope_from_witness(q, &r)
}
