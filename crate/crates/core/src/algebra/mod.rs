//! Exact scalar, polynomial and linear algebra shared by every other module.

pub mod arith;
pub mod form;
pub mod linmat;
pub mod matrix;
pub mod poly;

pub use arith::Rational;
pub use form::{LinMap3, ProjPoint, TernaryForm};
pub use linmat::LinearMatrixRep;
pub use matrix::Matrix;
pub use poly::UniPoly;
