use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Fraction;
use crate::error::{Error, Result};

/// An expansion `r + [b_1, ..., b_k]` standing for
/// `r + 1/(b_1 - 1/(b_2 - ... - 1/b_k))`.
///
/// Values produced by [`even_cf_expand`] have every entry even with
/// `|b_i| >= 2`; hand-built values may hold arbitrary entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EvenCF {
    pub integer_part: BigInt,
    pub entries: Vec<BigInt>,
}

impl EvenCF {
    pub fn new(integer_part: impl Into<BigInt>, entries: impl IntoIterator<Item = i64>) -> Self {
        EvenCF {
            integer_part: integer_part.into(),
            entries: entries.into_iter().map(BigInt::from).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// True when every entry is even and nonzero.
    pub fn is_even(&self) -> bool {
        self.entries.iter().all(|b| !b.is_zero() && b.is_even())
    }
}

/// The unique expansion of `x` with all entries even, for `x` with odd denominator.
///
/// The integer part takes the parity of the numerator, which leaves a
/// remainder of the form even/odd in `(-1, 1)`. Inverting that remainder gives
/// a value with mixed numerator/denominator parity, so exactly one even integer
/// lies within distance less than one of it; that integer is the next entry.
pub fn even_cf_expand(x: &Fraction) -> Result<EvenCF> {
    if x.denom().is_even() {
        return Err(Error::EvenDenominator(x.denom().clone()));
    }
    let mut r = x.floor();
    if (x.numer() - &r).is_odd() {
        r += 1;
    }
    // remainder num/den with den > 0; stays reduced since each step is unimodular
    let mut num = x.numer() - &r * x.denom();
    let mut den = x.denom().clone();
    let mut entries = Vec::new();
    while !num.is_zero() {
        // the inverse den/num must lie strictly between b - 1 and b + 1
        let (floor, rem) = den.div_mod_floor(&num);
        if rem.is_zero() && floor.is_odd() {
            return Err(Error::Internal("even rounding tie at an odd integer"));
        }
        let b = if floor.is_odd() { floor + 1 } else { floor };
        // tail = b - den/num
        let next_num = &b * &num - &den;
        if next_num.magnitude() >= num.magnitude() {
            return Err(Error::Internal("even rounding left a gap of at least one"));
        }
        den = num;
        num = next_num;
        if den.is_negative() {
            den = -den;
            num = -num;
        }
        entries.push(b);
    }
    Ok(EvenCF {
        integer_part: r,
        entries,
    })
}

/// Exact value of an expansion, folding from the innermost entry outward.
pub fn cf_eval(cf: &EvenCF) -> Result<Fraction> {
    let (mut num, mut den) = (BigInt::zero(), BigInt::one());
    for b in cf.entries.iter().rev() {
        if b.is_zero() {
            return Err(Error::ZeroEntry);
        }
        // 1 / (b - num/den)
        let next_den = b * &den - &num;
        if next_den.is_zero() {
            return Err(Error::ZeroIntermediate);
        }
        num = den;
        den = next_den;
    }
    Fraction::new(&cf.integer_part * &den + num, den)
}

impl fmt::Display for EvenCF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + [", self.integer_part)?;
        for (i, b) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{b}")?;
        }
        f.write_str("]")
    }
}

/// Parses `r + [b1,b2,...]`; whitespace around tokens is ignored.
impl FromStr for EvenCF {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(s.to_string());
        let (head, list) = s.split_once('+').ok_or_else(bad)?;
        let integer_part = head.trim().parse::<BigInt>().map_err(|_| bad())?;
        let list = list
            .trim()
            .strip_prefix('[')
            .and_then(|l| l.strip_suffix(']'))
            .ok_or_else(bad)?;
        let entries = if list.trim().is_empty() {
            Vec::new()
        } else {
            list.split(',')
                .map(|t| t.trim().parse::<BigInt>().map_err(|_| bad()))
                .collect::<Result<Vec<_>>>()?
        };
        Ok(EvenCF {
            integer_part,
            entries,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeMap;
    use alloc::vec;

    fn frac(n: i64, d: i64) -> Fraction {
        Fraction::new(n, d).unwrap()
    }

    #[test]
    fn expansion_fixtures() {
        assert_eq!(even_cf_expand(&frac(3, 5)).unwrap(), EvenCF::new(1, [-2, 2]));
        assert_eq!(even_cf_expand(&frac(11, 15)).unwrap(), EvenCF::new(1, [-4, -4]));
        assert_eq!(even_cf_expand(&frac(7, 15)).unwrap(), EvenCF::new(1, [-2, -8]));
        assert_eq!(even_cf_expand(&frac(1, 3)).unwrap(), EvenCF::new(1, [-2, -2]));
        assert_eq!(even_cf_expand(&frac(5, 1)).unwrap(), EvenCF::new(5, []));
    }

    #[test]
    fn even_denominator_rejected() {
        assert_eq!(
            even_cf_expand(&frac(1, 4)),
            Err(Error::EvenDenominator(BigInt::from(4)))
        );
    }

    #[test]
    fn eval_fixtures() {
        assert_eq!(cf_eval(&EvenCF::new(1, [-2, 2])).unwrap(), frac(3, 5));
        assert_eq!(cf_eval(&EvenCF::new(1, [-2, -8])).unwrap(), frac(7, 15));
        assert_eq!(cf_eval(&EvenCF::new(0, [])).unwrap(), Fraction::zero());
    }

    #[test]
    fn eval_rejects_degenerate_inputs() {
        // 1/(1 - 1/1) divides by zero
        assert_eq!(cf_eval(&EvenCF::new(0, [1, 1])), Err(Error::ZeroIntermediate));
        assert_eq!(cf_eval(&EvenCF::new(0, [2, 0])), Err(Error::ZeroEntry));
    }

    #[test]
    fn text_form() {
        let cf = EvenCF::new(1, [-2, -8]);
        assert_eq!(cf.to_string(), "1 + [-2,-8]");
        assert_eq!("1 + [-2,-8]".parse::<EvenCF>().unwrap(), cf);
        assert_eq!("-3+[ 4 , 2 ]".parse::<EvenCF>().unwrap(), EvenCF::new(-3, [4, 2]));
        assert_eq!("5 + []".parse::<EvenCF>().unwrap(), EvenCF::new(5, []));
        assert!("5 [2]".parse::<EvenCF>().is_err());
    }

    /// Every even-entry tail `[b_1..b_k]` with `k <= max_len`, `|b_i| <= bound`
    /// and reduced denominator at most `max_den`, built innermost-first.
    ///
    /// Prepending an entry to a tail `n/d` with `|n/d| < 1` gives `d/(b d - n)`,
    /// whose denominator exceeds `d` whenever `|b| >= 2`, so a tail whose
    /// denominator already passed `max_den` can be dropped.
    fn brute_force_tails(max_len: usize, bound: i64, max_den: i64) -> Vec<(Vec<i64>, i64, i64)> {
        let evens: Vec<i64> = (2..=bound).step_by(2).flat_map(|b| [b, -b]).collect();
        let mut out = Vec::new();
        let mut frontier = vec![(Vec::new(), 0i64, 1i64)];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for (tail, n, d) in &frontier {
                for &b in &evens {
                    let (mut nn, mut nd) = (*d, b * d - n);
                    if nd < 0 {
                        nn = -nn;
                        nd = -nd;
                    }
                    if nd > max_den {
                        continue;
                    }
                    let mut entries = vec![b];
                    entries.extend_from_slice(tail);
                    next.push((entries, nn, nd));
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out.push((Vec::new(), 0, 1));
        out
    }

    #[test]
    fn expansion_unique_against_enumeration() {
        let max_q = 41;
        let tails = brute_force_tails(6, 40, max_q);
        // index by (denominator, numerator residue)
        let mut by_residue: BTreeMap<(i64, i64), Vec<(Vec<i64>, i64)>> = BTreeMap::new();
        for (entries, n, d) in tails {
            let g = n.gcd(&d);
            let (n, d) = (n / g, d / g);
            by_residue
                .entry((d, n.rem_euclid(d)))
                .or_default()
                .push((entries, n));
        }
        let mut checked = 0;
        for q in (3..=max_q).step_by(2) {
            for p in 1..q {
                if p.gcd(&q) != 1 {
                    continue;
                }
                let hits = by_residue.get(&(q, p)).map_or(&[][..], |h| &h[..]);
                let ours = even_cf_expand(&frac(p, q)).unwrap();
                let in_window = ours.len() <= 6
                    && ours.entries.iter().all(|b| b.abs() <= BigInt::from(40));
                if !in_window {
                    assert!(hits.is_empty(), "{p}/{q} has a short expansion besides {ours}");
                    continue;
                }
                assert_eq!(hits.len(), 1, "{p}/{q} has {} even expansions", hits.len());
                let (entries, n) = &hits[0];
                let expected = EvenCF::new((p - n) / q, entries.iter().copied());
                assert_eq!(ours, expected);
                checked += 1;
            }
        }
        assert!(checked > 200, "{checked}");
    }
}
