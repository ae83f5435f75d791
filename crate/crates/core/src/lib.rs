//! Exact q-series and enumeration for k-marked Durfee symbols and k-marked
//! strongly unimodal symbols.
//!
//! - [`series`]: truncated power series in `q` with Laurent-polynomial
//!   coefficients and q-Pochhammer products.
//! - [`combinat`]: the combinatorial objects, their ranks and brute-force censuses.
//! - [`genfun`]: the rank generating functions as truncated series.
//! - [`specialize`]: evaluation of the marking variables at roots of unity.
//! - [`verify`]: coefficient-by-coefficient checks of generating functions
//!   against enumeration.
//! - [`cli`]: the command-line front end.

pub mod cli;
pub mod combinat;
pub mod genfun;
pub mod series;
pub mod specialize;
pub mod verify;
