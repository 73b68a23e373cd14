use chambers::{uniform_grid, PointConfig};
use symring::Complex64;

use crate::error::A3Error;
use crate::point::{critical_data, A3Point};

/// Leading-order canonical coordinates at `(−h²/8, εe^{iφ}, h)`:
/// `u₁ = 0`, `u₂,₃ = −h²/4 + ε|h|^{1/2}e^{i(arg h/2 + φ ± π/2)}`.
pub fn split_point(h: Complex64, eps: f64, phi: f64) -> PointConfig {
    let base = -h * h / 4.0;
    let r = eps * h.norm().sqrt();
    let a = h.arg() / 2.0 + phi;
    let q = std::f64::consts::FRAC_PI_2;
    PointConfig::new(vec![Complex64::new(0.0, 0.0), base + Complex64::from_polar(r, a + q), base + Complex64::from_polar(r, a - q)])
        .expect("finite")
}

/// `h ↦ h·e^{iθ}` for `θ` from 0 to `turn`, at fixed split `(ε, φ)`.
pub fn rotation_path(h0: Complex64, turn: f64, eps: f64, phi: f64, samples: usize) -> Vec<PointConfig> {
    uniform_grid(samples).into_iter().map(|s| split_point(h0 * Complex64::from_polar(1.0, turn * s), eps, phi)).collect()
}

/// The quarter turn `arg h: 0 → π/2` with `ε = 10⁻³`, `φ = π − 0.2`, sampled 2001 times.
pub fn quarter_turn_path() -> Vec<PointConfig> {
    rotation_path(Complex64::new(1.0, 0.0), std::f64::consts::FRAC_PI_2, 1e-3, std::f64::consts::PI - 0.2, 2001)
}

/// Exact critical values at `(−h²/8, εe^{iφ}, h)`, matched to [`split_point`] by nearest neighbour.
pub fn exact_split_point(h: Complex64, eps: f64, phi: f64) -> Result<PointConfig, A3Error> {
    let cd = critical_data(&A3Point::maxwell(h, Complex64::from_polar(eps, phi)))?;
    let approx = split_point(h, eps, phi);
    let mut used = [false; 3];
    let mut u = Vec::with_capacity(3);
    for a in approx.u() {
        let k = (0..3)
            .filter(|&k| !used[k])
            .min_by(|&x, &y| (cd.u[x] - a).norm().total_cmp(&(cd.u[y] - a).norm()))
            .expect("three values");
        used[k] = true;
        u.push(cd.u[k]);
    }
    Ok(PointConfig::new(u)?)
}
