//! The A₃ Frobenius manifold near its Maxwell stratum.

mod error;
mod path;
mod point;
mod reference;
pub mod series;

pub use error::A3Error;
pub use path::{exact_split_point, quarter_turn_path, rotation_path, split_point};
pub use point::{critical_data, eta_numeric, psi_matrix_a3, u_matrix, A3Point, CriticalData};
pub use reference::{
    a3_eta, a3_mu, a3_reference, band_for_arg, band_label, c_lex, coxeter_matrix, reproduce_a3_table, reproduced_rows,
    s_lex, table_word, unpermuted_reference, unpermuted_s, TableRow, BANDS, LEX_PERMUTATION,
};
