use alloc::string::ToString;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A reduced rational number with positive denominator.
///
/// Zero is stored as `0/1`. Knot slopes, suture slopes and continued-fraction
/// values all use this type.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fraction(BigRational);

impl Fraction {
    /// Reduces `num/den` and moves the sign onto the numerator.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let den = den.into();
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Fraction(BigRational::new(num.into(), den)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Fraction(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Fraction(BigRational::zero())
    }

    pub fn one() -> Self {
        Fraction(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// Largest integer not exceeding the value.
    pub fn floor(&self) -> BigInt {
        self.numer().div_floor(self.denom())
    }

    /// The value minus its floor, in `[0, 1)`.
    pub fn fract(&self) -> Fraction {
        Fraction(&self.0 - BigRational::from_integer(self.floor()))
    }

    pub fn abs(&self) -> Fraction {
        Fraction(self.0.abs())
    }

    pub fn recip(&self) -> Result<Fraction> {
        if self.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Fraction(self.0.recip()))
    }

    pub(crate) fn as_ratio(&self) -> &BigRational {
        &self.0
    }

    pub(crate) fn from_ratio(r: BigRational) -> Self {
        Fraction(r)
    }
}

impl From<i64> for Fraction {
    fn from(n: i64) -> Self {
        Fraction::from_integer(n)
    }
}

impl From<BigInt> for Fraction {
    fn from(n: BigInt) -> Self {
        Fraction::from_integer(n)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<&Fraction> for &Fraction {
            type Output = Fraction;
            fn $method(self, rhs: &Fraction) -> Fraction {
                Fraction($tr::$method(&self.0, &rhs.0))
            }
        }

        impl $tr for Fraction {
            type Output = Fraction;
            fn $method(self, rhs: Fraction) -> Fraction {
                Fraction($tr::$method(self.0, rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for Fraction {
    type Output = Fraction;
    fn neg(self) -> Fraction {
        Fraction(-self.0)
    }
}

impl Neg for &Fraction {
    type Output = Fraction;
    fn neg(self) -> Fraction {
        Fraction(-&self.0)
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom().is_one() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

/// Accepts `p/q` with an optional leading `-`, or a bare integer.
impl FromStr for Fraction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(s.to_string());
        let (neg, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        let digits = |t: &str| -> Result<BigInt> {
            if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            t.parse::<BigInt>().map_err(|_| bad())
        };
        let (num, den) = match body.split_once('/') {
            Some((n, d)) => (digits(n)?, digits(d)?),
            None => (digits(body)?, BigInt::one()),
        };
        let num = if neg { -num } else { num };
        Fraction::new(num, den)
    }
}
