//! Quantum cohomology of the Grassmannian `𝔾₂(ℂ⁴)`: Schubert calculus,
//! characteristic classes of the Kapranov collection, and the monodromy data
//! at `t = 0` together with the checks relating them.

pub mod classes;
pub mod cohom;
mod error;
mod pipeline;
pub mod reference;

pub use classes::{
    c_kap, chern_character, gamma_class, lambda_f, tangent_power_sums, todd_and_gram, todd_class, GammaSign, Young,
    KAPRANOV_ORDER,
};
pub use cohom::CohClass;
pub use error::G24Error;
pub use pipeline::{
    band_crossing_line, band_crossing_path, band_crossing_point, band_rows, band_table, identity_in_v,
    levelt_conjugation_check, psi_check_g24, solve_v, track_band_crossing, verify_g24, verify_resultg24, BandRow,
};
pub use reference::{canonical_small, g24_reference, group_member, quantum_mult_matrix};
