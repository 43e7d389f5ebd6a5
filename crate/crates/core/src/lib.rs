//! Exact arithmetic for motivic generating series of symmetric quivers.
//!
//! The crate computes, over the rational function field in `u = q^{1/2}`:
//!
//! * the motivic generating series of a symmetric quiver and the Poincaré
//!   series of its associated supercommutative quadratic algebra,
//! * refined Donaldson-Thomas invariants via plethystic logarithms, with
//!   integrality, positivity and parity checks,
//! * characters of the Koszul-dual Lie algebra, cross-validated against
//!   Lyndon-word enumeration, a partition model, and Gröbner-basis
//!   normal-word counts.
//!
//! Everything is exact: coefficients are rational functions with arbitrary
//! precision integer coefficients, and every check is an identity test, not a
//! floating-point comparison.

pub mod grobner;
pub mod lieword;
pub mod motivic;
pub mod partitions;
pub mod qseries;
pub mod quiver;
pub mod selftest;

pub use qseries::{DimVector, IntPoly, LaurentExpansion, MSeries, QRat, SeriesError};
pub use quiver::{Quiver, QuiverError};
