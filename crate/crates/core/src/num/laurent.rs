use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::Fraction;
use crate::error::{Error, Result};

/// Sparse Laurent polynomial in one variable `t` with integer coefficients.
///
/// Zero coefficients are never stored, so structural equality is polynomial
/// equality.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn monomial(coeff: impl Into<BigInt>, exp: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff.into());
        p
    }

    /// Builds from `(coefficient, exponent)` pairs, merging repeated exponents.
    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (C, i64)>) -> Self {
        let mut p = Self::zero();
        for (c, e) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    /// Dense coefficients starting at exponent `lowest`.
    pub fn from_coeffs<C: Into<BigInt>>(lowest: i64, coeffs: impl IntoIterator<Item = C>) -> Self {
        Self::from_terms(coeffs.into_iter().zip(lowest..))
    }

    pub fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    /// `(exponent, coefficient)` in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Difference between the highest and lowest exponent.
    pub fn span(&self) -> Option<i64> {
        Some(self.max_exp()? - self.min_exp()?)
    }

    /// Dense coefficient list from the lowest to the highest exponent.
    pub fn dense_coeffs(&self) -> Vec<BigInt> {
        match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => (lo..=hi).map(|e| self.coeff(e)).collect(),
            _ => Vec::new(),
        }
    }

    pub fn shift(&self, by: i64) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (e + by, c.clone())).collect(),
        }
    }

    /// Exact value at a rational point.
    pub fn eval_at(&self, t: &Fraction) -> Result<Fraction> {
        if t.is_zero() {
            if self.min_exp().is_some_and(|e| e < 0) {
                return Err(Error::PoleAtZero);
            }
            return Ok(Fraction::from_integer(self.coeff(0)));
        }
        let mut acc = Fraction::zero();
        for (e, c) in self.terms() {
            let base = if e < 0 { t.recip()? } else { t.clone() };
            let power = Fraction::from_ratio(num_traits::pow(base.as_ratio().clone(), e.unsigned_abs() as usize));
            acc = &acc + &(&power * &Fraction::from_integer(c.clone()));
        }
        Ok(acc)
    }

    /// Sum of the coefficients, i.e. the value at `t = 1`.
    pub fn value_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Value at `t = -1`.
    pub fn value_at_minus_one(&self) -> BigInt {
        self.terms
            .iter()
            .map(|(e, c)| if e % 2 == 0 { c.clone() } else { -c })
            .sum()
    }

    /// Coefficient list reads the same in both directions.
    pub fn is_palindromic(&self) -> bool {
        let c = self.dense_coeffs();
        c.iter().eq(c.iter().rev())
    }

    /// Representative of `p` up to multiplication by `±t^k`: lowest exponent 0,
    /// lowest coefficient positive.
    pub fn normalize_units(&self) -> Result<Self> {
        let (lo, low_coeff) = self.terms().next().ok_or(Error::ZeroPolynomial)?;
        let shifted = self.shift(-lo);
        Ok(if low_coeff.is_negative() { -shifted } else { shifted })
    }

    /// Representative with `p(t) = p(1/t)` and `p(1) = +1`.
    pub fn normalize_symmetric(&self) -> Result<Self> {
        let n = self.normalize_units()?;
        if !n.is_palindromic() {
            return Err(Error::NotPalindromic);
        }
        let span = n.span().unwrap_or(0);
        if span % 2 != 0 {
            return Err(Error::NoSymmetricCentering(span));
        }
        let centered = n.shift(-span / 2);
        let at_one = centered.value_at_one();
        if at_one.is_one() {
            Ok(centered)
        } else if (-&at_one).is_one() {
            Ok(-centered)
        } else {
            Err(Error::NotUnitAtOne(at_one))
        }
    }

    /// `p(t) = p(1/t)` term by term.
    pub fn is_symmetric(&self) -> bool {
        self.terms.iter().all(|(e, c)| self.terms.get(&-e) == Some(c))
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, -c);
        }
        out
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.terms.values_mut() {
            *c = -core::mem::take(c);
        }
        self
    }
}

macro_rules! owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                $tr::$method(&self, &rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

/// Ascending exponents, `c*t^e` joined by ` + `, with negative coefficients
/// folded into the separator: `4 - 7*t + 4*t^2`, `-1*t^-1 + 3 - 1*t`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            match e {
                0 => write!(f, "{mag}")?,
                1 => write!(f, "{mag}*t")?,
                _ => write!(f, "{mag}*t^{e}")?,
            }
        }
        Ok(())
    }
}

impl core::str::FromStr for LaurentPoly {
    type Err = Error;

    /// Inverse of the `Display` form.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(alloc::string::ToString::to_string(s));
        let s = s.trim();
        if s == "0" {
            return Ok(LaurentPoly::zero());
        }
        let mut poly = LaurentPoly::zero();
        let (mut negative, mut rest) = match s.strip_prefix('-') {
            Some(r) => (true, r),
            None => (false, s),
        };
        loop {
            let (term, next) = match (rest.find(" + "), rest.find(" - ")) {
                (Some(a), Some(b)) if a < b => (&rest[..a], Some((false, &rest[a + 3..]))),
                (Some(_), Some(b)) | (None, Some(b)) => (&rest[..b], Some((true, &rest[b + 3..]))),
                (Some(a), None) => (&rest[..a], Some((false, &rest[a + 3..]))),
                (None, None) => (rest, None),
            };
            let (mag, exp) = match term.split_once("*t") {
                None => (term, 0),
                Some((m, "")) => (m, 1),
                Some((m, e)) => (m, e.strip_prefix('^').ok_or_else(bad)?.parse::<i64>().map_err(|_| bad())?),
            };
            if mag.is_empty() || !mag.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            let mag: BigInt = mag.parse().map_err(|_| bad())?;
            if mag.is_zero() || poly.terms.contains_key(&exp) {
                return Err(bad());
            }
            poly.add_term(exp, if negative { -mag } else { mag });
            match next {
                Some((neg, r)) => {
                    negative = neg;
                    rest = r;
                }
                None => break,
            }
        }
        Ok(poly)
    }
}
