//! Monodromy data `(μ, R, η, S, C)` of a semisimple Frobenius manifold: the
//! structural invariants, the three mutual constraints, the isotropy groups
//! `𝔤(η, μ)` and `𝒞₀(η, μ, R)`, and the permutation, sign, gauge, shift and
//! braid actions.

mod actions;
mod braid;
mod checks;
mod data;
mod error;
mod report;

pub use actions::{
    apply_all, apply_braid, apply_gauge, apply_permutation, apply_shift, apply_signs, braid_matrix,
    braid_matrix_inverse, braid_word_matrix, permutation_matrix, sign_matrix, ActionRecord,
};
pub use braid::{center_braid, BraidWord};
pub use checks::{
    c0_membership, c0_violations, check_constraints, coalescence_vanishing_check, default_coalescence_tol,
    g_eta_mu_membership,
};
pub use data::{round15, MonodromyData};
pub use error::MonodromyError;
pub use report::{Check, Report, Status};
