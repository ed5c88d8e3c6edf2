//! Exact enumeration toolkit for restricted growth functions (RGFs).
//!
//! An RGF is a word `w = w_1 w_2 ... w_n` of positive integers with `w_1 = 1`
//! and `w_i <= 1 + max(w_1, ..., w_{i-1})`; these words encode set partitions
//! of `{1, ..., n}`. This crate provides:
//!
//! - [`words`]: words, RGFs, set partitions, standardization, and exhaustive
//!   lexicographic generation.
//! - [`patterns`]: subword-pattern containment and avoidance classes with
//!   pruned generation, structural characterizations, and arc diagrams.
//! - [`statistics`]: the four statistics counting distinct values to the
//!   left/right of each letter that are bigger/smaller, and their
//!   four-variable generating polynomials.
//! - [`polynomials`]: sparse exact-integer polynomials in `q, r, s, t`,
//!   Gaussian polynomials and their bivariate analogues, and exact rational
//!   arithmetic over univariate polynomials.
//! - [`objects`]: integer partitions in rectangles, rooted unimodal
//!   compositions, and (two-colored) Motzkin paths with area/level statistics.
//! - [`bijections`]: the constructive bijections between the above objects,
//!   each with an inverse and declared statistic transports.
//! - [`closed_forms`]: a registry of closed-form and recursive formulas for
//!   avoidance-class generating functions.
//! - [`verify`]: a harness that checks every formula, characterization,
//!   bijection, and equidistribution claim against brute-force enumeration.
//!
//! The polynomial layer is generic over its coefficient scalar (any signed
//! integer with checked arithmetic); the concrete aliases used everywhere are
//! defined here at the crate root.

pub mod bijections;
pub mod closed_forms;
pub mod counting;
pub mod error;
pub mod objects;
pub mod patterns;
pub mod polynomials;
pub mod statistics;
pub mod verify;
pub mod words;

pub use error::{Error, Result};
pub use words::{Rgf, SetPartition, Word, DEFAULT_MAX_N};

/// Sparse exact polynomial in `q, r, s, t` with 64-bit checked coefficients.
///
/// Desk-scale avoidance classes stay far below `2^63` words, so 64-bit
/// coefficients never saturate in practice; overflow is a hard error, never a
/// silent wraparound.
pub type MultiPoly = polynomials::Poly<i64>;

/// Exact rational function of `q` with 64-bit checked coefficients.
pub type QRat = polynomials::QRational<i64>;
