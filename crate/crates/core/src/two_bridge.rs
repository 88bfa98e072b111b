//! 2-bridge knots `K(p/q)` and their classification up to isotopy.
//!
//! `K(p/q)` and `K(p'/q')` are isotopic exactly when `q = q'` and
//! `p' ≡ p^{±1} (mod q)`. Mirror images `K((q-p)/q)` are kept as separate
//! knots by [`is_equivalent`] and [`canonicalize`]; the catalog enumeration
//! ([`enumerate_canonical`]) lists one knot per mirror pair.

use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_integer::Integer;

use crate::error::{Error, KnotError, Result};
use crate::num::Fraction;

/// A validated 2-bridge knot: `q` odd, `q >= 3`, `0 < p < q`, `gcd(p, q) = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwoBridgeKnot {
    // field order gives the (q, p) ordering
    q: u64,
    p: u64,
}

impl TwoBridgeKnot {
    pub fn new(p: i64, q: i64) -> Result<Self, KnotError> {
        validate(p, q)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn slope(&self) -> Fraction {
        Fraction::new(self.p, self.q).expect("q >= 3")
    }

    pub fn p_inverse(&self) -> u64 {
        mod_inverse(self.p, self.q)
    }
}

pub fn validate(p: i64, q: i64) -> Result<TwoBridgeKnot, KnotError> {
    if q.is_even() {
        return Err(KnotError::EvenQ { q });
    }
    if q < 3 {
        return Err(KnotError::QTooSmall { q });
    }
    if p <= 0 || p >= q {
        return Err(KnotError::POutOfRange { p, q });
    }
    let gcd = p.gcd(&q);
    if gcd != 1 {
        return Err(KnotError::NotCoprime { p, q, gcd });
    }
    Ok(TwoBridgeKnot {
        q: q as u64,
        p: p as u64,
    })
}

/// Inverse of `a` modulo `m` for coprime `a`, `m`, in `[0, m)`.
pub(crate) fn mod_inverse(a: u64, m: u64) -> u64 {
    let e = (a as i128).extended_gcd(&(m as i128));
    debug_assert_eq!(e.gcd, 1);
    e.x.rem_euclid(m as i128) as u64
}

pub fn is_equivalent(a: &TwoBridgeKnot, b: &TwoBridgeKnot) -> bool {
    if a.q != b.q {
        return false;
    }
    let q = a.q as u128;
    a.p == b.p || (a.p as u128 * b.p as u128) % q == 1
}

/// Deterministic representative of the isotopy class of `k`.
///
/// The class is `{p, p⁻¹ mod q}`. The smallest odd member is chosen; when both
/// members are even the smaller one is returned and Minkus-style computations
/// fall back to the mirror.
pub fn canonicalize(k: &TwoBridgeKnot) -> TwoBridgeKnot {
    let members = [k.p, k.p_inverse()];
    let p = members
        .iter()
        .copied()
        .filter(|m| m % 2 == 1)
        .min()
        .unwrap_or_else(|| members[0].min(members[1]));
    TwoBridgeKnot { q: k.q, p }
}

pub fn mirror(k: &TwoBridgeKnot) -> TwoBridgeKnot {
    TwoBridgeKnot { q: k.q, p: k.q - k.p }
}

/// Representative of `k` up to isotopy and mirror image: the smallest odd
/// value among `p`, `p⁻¹`, `q-p`, `(q-p)⁻¹` modulo `q`.
///
/// Always odd, since a class with only even members has an all-odd mirror.
pub fn canonicalize_up_to_mirror(k: &TwoBridgeKnot) -> TwoBridgeKnot {
    let inv = k.p_inverse();
    let p = [k.p, inv, k.q - k.p, k.q - inv]
        .into_iter()
        .filter(|m| m % 2 == 1)
        .min()
        .expect("one of a class and its mirror has an odd member");
    TwoBridgeKnot { q: k.q, p }
}

/// An isotopy class with its representative and every `p` in it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalClass {
    pub representative: TwoBridgeKnot,
    pub members: Vec<u64>,
}

pub fn canonical_class(k: &TwoBridgeKnot) -> CanonicalClass {
    let mut members = alloc::vec![k.p, k.p_inverse()];
    members.sort_unstable();
    members.dedup();
    CanonicalClass {
        representative: canonicalize(k),
        members,
    }
}

/// One knot per mirror pair of isotopy classes with `3 <= q <= q_max`,
/// sorted by `(q, p)`, each given by [`canonicalize_up_to_mirror`].
pub fn enumerate_canonical(q_max: u64) -> Vec<TwoBridgeKnot> {
    let mut out = Vec::new();
    for q in (3..=q_max).step_by(2) {
        out.extend(enumerate_for_q(q));
    }
    out
}

/// The [`enumerate_canonical`] members with denominator exactly `q`.
pub fn enumerate_for_q(q: u64) -> Vec<TwoBridgeKnot> {
    if q < 3 || q.is_multiple_of(2) {
        return Vec::new();
    }
    // p is its own representative iff it is the smallest odd value of its orbit
    (1..q)
        .filter(|&p| p.gcd(&q) == 1)
        .map(|p| TwoBridgeKnot { q, p })
        .filter(|k| canonicalize_up_to_mirror(k) == *k)
        .collect()
}

impl fmt::Display for TwoBridgeKnot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K({}/{})", self.p, self.q)
    }
}

/// Accepts `K(p/q)` or a bare `p/q`.
impl FromStr for TwoBridgeKnot {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s
            .strip_prefix("K(")
            .and_then(|r| r.strip_suffix(')'))
            .unwrap_or(s);
        let (p, q) = body.split_once('/').ok_or_else(|| Error::Parse(s.to_string()))?;
        let int = |t: &str| {
            let digits = t.strip_prefix('-').unwrap_or(t);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::Parse(s.to_string()));
            }
            t.parse::<i64>().map_err(|_| Error::Parse(s.to_string()))
        };
        Ok(validate(int(p)?, int(q)?)?)
    }
}
