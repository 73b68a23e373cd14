//! Truncated expansions in `t₂` at `(−h²/8, t₂, h)`.

use linalg::cmat::CMatrix;
use symring::Complex64;

fn i() -> Complex64 {
    Complex64::new(0.0, 1.0)
}

/// `(u₁, u₂, u₃)` through order `t₂⁹`.
pub fn u_series(t2: Complex64, h: Complex64) -> [Complex64; 3] {
    let s2 = 2f64.sqrt();
    let sh = h.sqrt();
    let p = |k: i32| t2.powi(k);
    let u1 = -p(2) / (4.0 * h) + p(4) / (16.0 * h.powi(4)) - p(6) / (16.0 * h.powi(7)) + 3.0 * p(8) / (32.0 * h.powi(10));
    let even = -h * h / 4.0 + p(2) / (8.0 * h) - p(4) / (32.0 * h.powi(4)) + p(6) / (32.0 * h.powi(7))
        - 3.0 * p(8) / (64.0 * h.powi(10));
    let odd = i() * sh * t2 / s2 + i() * p(3) / (16.0 * s2 * h.powi(2) * sh)
        - 21.0 * i() * p(5) / (512.0 * s2 * h.powi(5) * sh)
        + 429.0 * i() * p(7) / (8192.0 * s2 * h.powi(8) * sh)
        - 46189.0 * i() * p(9) / (524288.0 * s2 * h.powi(11) * sh);
    [u1, even + odd, even - odd]
}

/// `Ψ(t₂)` through order `t₂³`.
pub fn psi_series(t2: Complex64, h: Complex64) -> CMatrix {
    let s2 = 2f64.sqrt();
    let sh = h.sqrt();
    let z = Complex64::new(0.0, 0.0);
    let c0 = [
        [1.0 / (s2 * sh), z, sh / (4.0 * s2)],
        [i() / (2.0 * sh), Complex64::from(-1.0 / (2.0 * s2)), -i() * sh / 8.0],
        [i() / (2.0 * sh), Complex64::from(1.0 / (2.0 * s2)), -i() * sh / 8.0],
    ];
    let h32 = h * sh;
    let c1 = [
        [z, -1.0 / (2.0 * s2 * h32), z],
        [-3.0 / (8.0 * s2 * h * h), -i() / (16.0 * h32), -5.0 / (32.0 * s2 * h)],
        [3.0 / (8.0 * s2 * h * h), -i() / (16.0 * h32), 5.0 / (32.0 * s2 * h)],
    ];
    let h52 = h * h * sh;
    let h72 = h52 * h;
    let c2 = [
        [-3.0 / (4.0 * s2 * h72), z, 1.0 / (16.0 * s2 * h52)],
        [-39.0 * i() / (128.0 * h72), 15.0 / (128.0 * s2 * h.powi(3)), -41.0 * i() / (512.0 * h52)],
        [-39.0 * i() / (128.0 * h72), -15.0 / (128.0 * s2 * h.powi(3)), -41.0 * i() / (512.0 * h52)],
    ];
    let h92 = h72 * h;
    let c3 = [
        [z, 5.0 / (8.0 * s2 * h92), z],
        [303.0 / (512.0 * s2 * h.powi(5)), 125.0 * i() / (1024.0 * h92), 265.0 / (2048.0 * s2 * h.powi(4))],
        [-303.0 / (512.0 * s2 * h.powi(5)), 125.0 * i() / (1024.0 * h92), -265.0 / (2048.0 * s2 * h.powi(4))],
    ];
    (0..3)
        .map(|r| (0..3).map(|k| c0[r][k] + t2 * c1[r][k] + t2 * t2 * c2[r][k] + t2.powi(3) * c3[r][k]).collect())
        .collect()
}
