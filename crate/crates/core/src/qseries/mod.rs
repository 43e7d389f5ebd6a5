//! Scalar and series arithmetic: rational functions in `u = q^{1/2}` and
//! truncated multivariate power series over them, with the plethystic
//! operations used throughout the crate.

mod mseries;
mod poly;
mod qrat;

pub use mseries::{dim_vectors, DimVector, MSeries, SeriesError};
pub use poly::IntPoly;
pub use qrat::{LaurentExpansion, QRat};
