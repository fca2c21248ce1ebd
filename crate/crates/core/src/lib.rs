//! Exact computation of spectrum polynomials and irregular Hodge numbers for
//! strongly non-degenerate functions on simple-normal-crossing pairs, with
//! the translation into limiting-Hodge and Landau-Ginzburg number tables.
//!
//! The pipeline: describe the pair (ambient variety, divisor components,
//! Hodge tables of all strata `D_I` and `D_I cap Z`) in [`snc::SncPair`],
//! feed it to [`spectrum::irregular_spectrum`] for the closed stratum
//! formula with its built-in cross-form oracles, then read irregular Hodge
//! numbers off the report or push it through [`kkp`] for the limiting-table
//! view and the Landau-Ginzburg comparison.
//!
//! All arithmetic is exact: polynomial coefficients are big integers and
//! exponents are reduced big rationals. The polynomial core
//! [`fracpoly::FracPoly`] is generic over its coefficient scalar; the
//! concrete aliases below fix the types the rest of the crate computes with.

pub mod cli;
pub mod fracpoly;
pub mod hodge;
pub mod kkp;
pub mod snc;
pub mod spectrum;

#[cfg(test)]
pub(crate) mod testutil;

/// Coefficient scalar used throughout the crate.
pub type Coeff = num_bigint::BigInt;

/// Exponent scalar: exact rationals in lowest terms.
pub type Exponent = num_rational::BigRational;

/// The concrete polynomial type of every spectrum computation.
pub type FracPoly = fracpoly::FracPoly<Coeff>;

/// Version tag carried by every JSON document this crate reads or writes.
pub const SCHEMA_VERSION: u32 = 1;
