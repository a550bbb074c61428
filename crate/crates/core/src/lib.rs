//! Exact computation with equal-rank pairs of root systems.
//!
//! Given a semi-simple root system `F` and a full-rank sub-root-system `B`
//! with consistent positivity, this crate computes the section `C` of the
//! Weyl group quotient `W(B)\W(F)`, the associated multiplets of `B`-dominant
//! weights `c • λ = c(λ + ρ_F) − ρ_B`, and verifies the resulting character,
//! dimension, and Casimir identities exactly in the formal character ring.
//!
//! All arithmetic is exact: weights are vectors of arbitrary-precision
//! rationals and characters carry arbitrary-precision integer coefficients.
//! No floating point appears anywhere.

pub mod charring;
pub mod cli;
pub mod error;
pub mod multiplet;
pub mod pair;
pub mod rootspace;
pub mod weyl;

pub use error::{Error, Result};
pub use pair::EqualRankPair;
pub use rootspace::{Family, RootSystem, SubSystem, WeightVector};
pub use weyl::CosetElement;

/// Arbitrary-precision integer used throughout.
pub type Int = num_bigint::BigInt;
/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator (guaranteed by `num-rational`).
pub type Rat = num_rational::BigRational;
