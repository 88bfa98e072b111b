use alloc::string::String;

use num_bigint::BigInt;

/// Reasons a `(p, q)` pair fails to describe a 2-bridge knot.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum KnotError {
    #[error("q must be odd (got q={q}); even q describes a 2-bridge link")]
    EvenQ { q: i64 },
    #[error("q must be at least 3 (got q={q})")]
    QTooSmall { q: i64 },
    #[error("p must satisfy 0 < p < q (got p={p}, q={q})")]
    POutOfRange { p: i64, q: i64 },
    #[error("p and q must be coprime (gcd({p},{q})={gcd})")]
    NotCoprime { p: i64, q: i64, gcd: i64 },
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("denominator must be odd (got {0})")]
    EvenDenominator(BigInt),
    #[error("continued fraction entries must be nonzero")]
    ZeroEntry,
    #[error("zero intermediate denominator while evaluating a continued fraction")]
    ZeroIntermediate,
    #[error("cannot evaluate at t=0 with negative exponents present")]
    PoleAtZero,
    #[error("zero polynomial has no unit normalization")]
    ZeroPolynomial,
    #[error("polynomial is not palindromic up to units")]
    NotPalindromic,
    #[error("coefficient support of odd degree span {0} admits no symmetric centering")]
    NoSymmetricCentering(i64),
    #[error("polynomial evaluates to {0} at t=1 after normalization, expected +1 or -1")]
    NotUnitAtOne(BigInt),
    #[error("Alexander polynomial must be symmetric with value 1 at t=1")]
    NotSymmetric,
    #[error("signature must be even to give integral Maslov gradings (got {0})")]
    OddSignature(i64),
    #[error("p must be odd for the Minkus formula (got K({p}/{q})); canonicalize or mirror first")]
    EvenNumerator { p: u64, q: u64 },
    #[error(transparent)]
    Knot(#[from] KnotError),
    #[error("empty continued fraction carries no Seifert surface data")]
    EmptyExpansion,
    #[error("plumbing surface needs an even number of bands (got {0})")]
    OddEntryCount(usize),
    #[error("band twist count must be even and nonzero (got {0})")]
    InvalidBand(BigInt),
    #[error("surgery denominator must satisfy |q| >= 2 (got {0})")]
    SurgeryDenominatorTooSmall(i64),
    #[error("gcd({p},{q})={gcd}: no longitude solves qs - pr = 1")]
    SurgeryNotCoprime { q: i64, p: i64, gcd: i64 },
    #[error("unknown invariant key `{0}`")]
    UnknownKey(String),
    #[error("cannot parse `{0}`")]
    Parse(String),
    #[error("internal invariant violated: {0}")]
    Internal(&'static str),
}

impl Error {
    /// Usage errors come from malformed requests rather than mathematical preconditions.
    pub fn is_usage(&self) -> bool {
        matches!(self, Error::UnknownKey(_) | Error::Parse(_))
    }
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
