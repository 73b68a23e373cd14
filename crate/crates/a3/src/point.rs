use linalg::cmat::CMatrix;
use symring::Complex64;

use crate::error::A3Error;

/// A point in flat coordinates `(t₁, t₂, t₃)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct A3Point {
    pub t: [Complex64; 3],
}

impl A3Point {
    pub fn new(t1: Complex64, t2: Complex64, t3: Complex64) -> Self {
        A3Point { t: [t1, t2, t3] }
    }

    /// The point `(−h²/8, t₂, h)` near the Maxwell stratum.
    pub fn maxwell(h: Complex64, t2: Complex64) -> Self {
        A3Point::new(-h * h / 8.0, t2, h)
    }

    /// `(a₀, a₁, a₂) = (t₁ + t₃²/8, t₂, t₃)`.
    pub fn a(&self) -> [Complex64; 3] {
        let [t1, t2, t3] = self.t;
        [t1 + t3 * t3 / 8.0, t2, t3]
    }

    /// `f(x) = x⁴ + a₂x² + a₁x + a₀`.
    pub fn f(&self, x: Complex64) -> Complex64 {
        let [a0, a1, a2] = self.a();
        x.powi(4) + a2 * x * x + a1 * x + a0
    }

    pub fn f_prime(&self, x: Complex64) -> Complex64 {
        let [_, a1, a2] = self.a();
        4.0 * x.powi(3) + 2.0 * a2 * x + a1
    }

    fn scale(&self) -> f64 {
        self.a().iter().map(|z| z.norm()).fold(1.0, f64::max)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CriticalData {
    pub x: [Complex64; 3],
    pub u: [Complex64; 3],
}

const CAUSTIC_TOL: f64 = 1e-10;

/// Critical points of `f` in closed form,
/// `x_i = θ̄_i·a₂/(3^{1/3}X) − θ_i·X/(2·3^{2/3})` with
/// `X = (−9a₁ + √3·√(27a₁² + 8a₂³))^{1/3}` on principal branches and
/// `θ = (−1, (1 − i√3)/2, (1 + i√3)/2)`; the critical values are `u_i = f(x_i)`.
pub fn critical_data(p: &A3Point) -> Result<CriticalData, A3Error> {
    let [_, a1, a2] = p.a();
    let scale = p.scale();
    let disc = 27.0 * a1 * a1 + 8.0 * a2.powi(3);
    if disc.norm() <= CAUSTIC_TOL * scale.powi(3) {
        return Err(A3Error::Degenerate("on the caustic 27a1^2 + 8a2^3 = 0".into()));
    }
    if a2.norm() <= CAUSTIC_TOL * scale {
        return Err(A3Error::Degenerate("a2 = 0".into()));
    }
    let s3 = 3f64.sqrt();
    let x_cube = -9.0 * a1 + s3 * disc.sqrt();
    if x_cube.norm() <= CAUSTIC_TOL * scale.powf(1.5) {
        return Err(A3Error::Degenerate("X(a) vanishes".into()));
    }
    let big_x = x_cube.powf(1.0 / 3.0);
    let theta = [Complex64::new(-1.0, 0.0), Complex64::new(0.5, -s3 / 2.0), Complex64::new(0.5, s3 / 2.0)];
    let c1 = 3f64.powf(1.0 / 3.0);
    let c2 = 2.0 * 3f64.powf(2.0 / 3.0);
    let x = theta.map(|th| th.conj() * a2 / (c1 * big_x) - th * big_x / c2);
    for xi in x {
        if p.f_prime(xi).norm() > 1e-9 * scale {
            return Err(A3Error::Degenerate(format!("residual {} at a critical point", p.f_prime(xi).norm())));
        }
    }
    for i in 0..3 {
        for j in i + 1..3 {
            if (x[i] - x[j]).norm() <= 1e-9 * scale {
                return Err(A3Error::Degenerate("critical points collide".into()));
            }
        }
    }
    Ok(CriticalData { x, u: x.map(|xi| p.f(xi)) })
}

/// `Ψ(t)` with principal square roots `√(6x_i² + a₂)`.
pub fn psi_matrix_a3(p: &A3Point) -> Result<CMatrix, A3Error> {
    let cd = critical_data(p)?;
    let a2 = p.a()[2];
    let [x1, x2, x3] = cd.x;
    let r = cd.x.map(|x| (6.0 * x * x + a2).sqrt());
    let q = 2.0 * 2f64.sqrt();
    let d1 = q * (x1 - x2) * (x1 - x3);
    let d2 = q * (x1 - x2) * (x2 - x3);
    let d3 = q * (x1 - x3) * (x3 - x2);
    Ok(vec![
        vec![r[0] / d1, -(x2 + x3) * r[0] / d1, -r[0] * (a2 - 4.0 * x2 * x3) / (4.0 * d1)],
        vec![-r[1] / d2, (x1 + x3) * r[1] / d2, r[1] * (a2 - 4.0 * x1 * x3) / (4.0 * d2)],
        vec![-r[2] / d3, (x1 + x2) * r[2] / d3, (a2 - 4.0 * x1 * x2) * r[2] / (4.0 * d3)],
    ])
}

/// Multiplication by the Euler field in the flat basis.
pub fn u_matrix(p: &A3Point) -> CMatrix {
    let [t1, t2, t3] = p.t;
    vec![
        vec![t1, -5.0 / 16.0 * t2 * t3, -3.0 / 16.0 * t2 * t2 + t3.powi(3) / 32.0],
        vec![0.75 * t2, t1 - t3 * t3 / 8.0, -5.0 / 16.0 * t2 * t3],
        vec![t3 / 2.0, 0.75 * t2, t1],
    ]
}

pub fn eta_numeric() -> CMatrix {
    let z = Complex64::new(0.0, 0.0);
    let q = Complex64::new(0.25, 0.0);
    vec![vec![z, z, q], vec![z, q, z], vec![q, z, z]]
}
