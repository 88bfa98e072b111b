//! Exact rationals, even continued fractions, and Laurent polynomials.

mod cf;
mod fraction;
mod laurent;

pub use cf::{cf_eval, even_cf_expand, EvenCF};
pub use fraction::Fraction;
pub use laurent::LaurentPoly;
