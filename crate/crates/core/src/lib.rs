//! Exact invariants of 2-bridge knot complements.
//!
//! A 2-bridge knot `K(p/q)` (with `q` odd) is the boundary of a surface made by
//! plumbing `k` twisted bands, read off from the unique continued fraction
//! `p/q = r + [b_1, ..., b_k]` with every `b_i` even. From that expansion and
//! the sign sequence `ε_i = (-1)^⌊ip/q⌋` this crate computes:
//!
//! - the Alexander polynomial, twice: by the Minkus sum ([`alexander`]) and as
//!   `det(V - tVᵀ)` of the plumbing Seifert matrix ([`seifert`]);
//! - the signature count of the ε-sequence and the classical signature of `V + Vᵀ`;
//! - knot Floer homology ranks, which for alternating knots follow from the two
//!   classical invariants ([`hfk`]);
//! - the guts of the knot complement: one sutured solid torus of slope `2/b_i`
//!   per band with `|b_i| > 2`, and the Kakimizu maximal-simplex dimension ([`guts`]).
//!
//! [`catalog`] collects these per knot and finds knots that knot Floer
//! homology cannot tell apart but guts can, such as `K(7/15)` and `K(11/15)`.
//!
//! Everything is exact integer and rational arithmetic. The crate is `no_std`
//! and needs only `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod alexander;
pub mod catalog;
pub mod error;
pub mod guts;
pub mod hfk;
pub mod num;
pub mod seifert;
pub mod two_bridge;

pub use catalog::{
    build_catalog, find_hfk_equal_guts_distinct, group_by, group_by_name, DistinguishedPair, InvariantKey,
    InvariantRecord,
};
pub use error::{Error, KnotError, Result};
pub use guts::{GutsDescriptor, SuturedSolidTorus};
pub use hfk::{HfkEntry, HfkTable};
pub use num::{cf_eval, even_cf_expand, EvenCF, Fraction, LaurentPoly};
pub use seifert::SeifertMatrix;
pub use two_bridge::{canonicalize, is_equivalent, mirror, validate, TwoBridgeKnot};
