//! Exact q-series engine for rank and crank deviations modulo 11.
//!
//! - [`series`]: truncated Laurent series with exact rational coefficients.
//! - [`products`]: q-Pochhammer symbols, theta functions, mock theta and Eisenstein series.
//! - [`oracle`]: rank, crank and spt statistics by enumeration and by generating functions.
//! - [`dissection`]: the coefficient tables of the 11-dissections and the combinators that render them.
//! - [`verify`]: every identity, congruence and inequality as a named check.

pub mod dissection;
pub mod oracle;
pub mod products;
pub mod series;
pub mod verify;

pub use series::{LaurentSeries, SeriesError};
