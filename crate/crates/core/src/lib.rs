//! Exact arithmetic for plane cubics over the rationals: invariants,
//! Jacobians, Weierstrass models and linear determinantal representations.

pub mod algebra;
pub mod census;
mod covering;
pub mod error;
mod invariant_tables;
pub mod detrep;
pub mod elliptic;
pub mod invariants;
pub mod plane_cubic;

pub use error::{Error, Result};
