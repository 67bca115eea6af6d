//! Braid representations of Lissajous-toric knots `K(N,q,p)`.
//!
//! The crate builds the braid `B(N,q,p)` in three independent ways and compares them:
//!
//! * [`symbolic`] evaluates the closed-form sign formulas (Bézout coefficients, the `ε`
//!   and `λ` signs, the `α`/`β` blocks and the product `Q·α·Q⁻¹·β`),
//! * [`oracle::exact`] enumerates every crossing of the braid shadow in exact rational
//!   arithmetic,
//! * [`oracle::float`] samples the strand functions numerically and reads crossings and
//!   their signs straight off the geometry.
//!
//! [`invariants`] evaluates the Kauffman bracket of braid closures through the
//! Temperley–Lieb algebra and derives the Jones polynomial, used to compare braids up to
//! mirror image and to check structural claims (trivial families, amphicheirality).

pub mod braid;
pub mod curve;
mod error;
pub mod invariants;
pub mod oracle;
pub mod symbolic;

pub use braid::{BraidWord, Letter, Permutation, Sign};
pub use error::{Error, Result};
