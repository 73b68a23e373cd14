//! Stokes rays, admissible lines, lexicographical orders and the braid words
//! read off along paths of canonical coordinates.

mod error;
mod geometry;
mod track;

pub use error::ChamberError;
pub use geometry::{
    is_admissible, lexicographic_order, normalize_angle, stokes_rays, LexOrder, OrientedLine, PointConfig, StokesRay,
    DEFAULT_ANGLE_TOL,
};
pub use num_complex::Complex64;
pub use track::{
    full_rotation_path, parse_path_json, path_to_json, piecewise_linear, track_braid, track_path, track_samples,
    uniform_grid, TrackResult, MAX_DEPTH,
};
