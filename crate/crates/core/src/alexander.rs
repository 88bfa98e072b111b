//! Alexander polynomial, signature count and determinant of `K(p/q)` from the
//! sign sequence `ε_i = (-1)^⌊ip/q⌋`.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::num::LaurentPoly;
use crate::two_bridge::TwoBridgeKnot;

/// Signs `ε_0, ..., ε_{q-1}`, each `+1` or `-1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EpsilonSequence {
    values: Vec<i8>,
}

impl EpsilonSequence {
    pub fn values(&self) -> &[i8] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Running sums `Σ_{i<=k} ε_i` for `k = 0..q`.
    pub fn partial_sums(&self) -> impl Iterator<Item = i64> + '_ {
        self.values.iter().scan(0i64, |acc, &e| {
            *acc += e as i64;
            Some(*acc)
        })
    }
}

fn require_odd_p(k: &TwoBridgeKnot) -> Result<()> {
    if k.p().is_multiple_of(2) {
        return Err(Error::EvenNumerator { p: k.p(), q: k.q() });
    }
    Ok(())
}

pub fn epsilon_sequence(k: &TwoBridgeKnot) -> Result<EpsilonSequence> {
    require_odd_p(k)?;
    let (p, q) = (k.p() as u128, k.q() as u128);
    let values = (0..q)
        .map(|i| if (i * p / q) % 2 == 0 { 1 } else { -1 })
        .collect();
    Ok(EpsilonSequence { values })
}

/// The raw sum `Σ_{k=0}^{q-1} (-1)^k t^{ε_0 + ... + ε_k}`; equal to the
/// Alexander polynomial up to `±t^n`.
pub fn minkus_alexander(k: &TwoBridgeKnot) -> Result<LaurentPoly> {
    let eps = epsilon_sequence(k)?;
    let mut poly = LaurentPoly::zero();
    for (j, exp) in eps.partial_sums().enumerate() {
        let sign = if j % 2 == 0 { 1 } else { -1 };
        poly.add_term(exp, BigInt::from(sign));
    }
    Ok(poly)
}

/// Positive minus negative entries of the full ε-sequence. Odd for every knot;
/// see [`crate::seifert::signature_standard`] for the even classical value.
pub fn minkus_signature(k: &TwoBridgeKnot) -> Result<i64> {
    let eps = epsilon_sequence(k)?;
    Ok(eps.values.iter().map(|&e| e as i64).sum())
}

/// `|Δ(-1)|`.
pub fn determinant(k: &TwoBridgeKnot) -> Result<BigInt> {
    Ok(minkus_alexander(k)?.value_at_minus_one().abs())
}
