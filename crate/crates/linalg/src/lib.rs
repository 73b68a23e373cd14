//! Exact dense matrices over [`symring::SymExpr`] and the formal `z^μ z^R`
//! conjugation calculus, where `z` carries quarter-integer exponents and
//! `log z` is a free commuting variable.

pub mod cmat;
mod error;
mod matrix;
mod zl;

pub use error::LinalgError;
pub use matrix::SymMatrix;
pub use zl::{conj_by_zpow, zl_is_polynomial, ZLMatrix, ZLPoly};
