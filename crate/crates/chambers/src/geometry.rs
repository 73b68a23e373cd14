use std::f64::consts::{PI, TAU};

use num_complex::Complex64;

use crate::error::ChamberError;

/// Canonical coordinates `u₁, …, u_n`; labels are 1-based in every public output.
#[derive(Clone, Debug, PartialEq)]
pub struct PointConfig {
    u: Vec<Complex64>,
}

impl PointConfig {
    pub fn new(u: Vec<Complex64>) -> Result<Self, ChamberError> {
        if u.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(ChamberError::Input("canonical coordinates must be finite".into()));
        }
        Ok(PointConfig { u })
    }

    pub fn u(&self) -> &[Complex64] {
        &self.u
    }

    pub fn n(&self) -> usize {
        self.u.len()
    }

    pub fn scale(&self) -> f64 {
        self.u.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Default coincidence radius `10⁻⁹·max(1, max|u_i|)`.
    pub fn coalescence_tol(&self) -> f64 {
        1e-9 * self.scale().max(1.0)
    }

    pub fn rotated(&self, theta: f64) -> Self {
        let r = Complex64::from_polar(1.0, theta);
        PointConfig { u: self.u.iter().map(|z| z * r).collect() }
    }
}

/// The line `ℓ(φ) = {ρe^{iφ} : ρ ∈ ℝ}`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OrientedLine {
    phi: f64,
}

impl OrientedLine {
    pub fn new(phi: f64) -> Result<Self, ChamberError> {
        if !phi.is_finite() {
            return Err(ChamberError::Input("line angle must be finite".into()));
        }
        Ok(OrientedLine { phi: normalize_angle(phi) })
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    pub fn direction(&self) -> Complex64 {
        Complex64::from_polar(1.0, self.phi)
    }

    /// `Re(z·e^{iφ})`, the coordinate along which labels are sorted.
    pub fn project(&self, z: Complex64) -> f64 {
        (z * self.direction()).re
    }
}

pub fn normalize_angle(x: f64) -> f64 {
    let r = x.rem_euclid(TAU);
    if r >= TAU {
        0.0
    } else {
        r
    }
}

/// The ray `R_ij` with angle in `[0, 2π)`; `i`, `j` are 1-based.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StokesRay {
    pub i: usize,
    pub j: usize,
    pub angle: f64,
}

/// All rays `R_ij = {−iρ(ū_i − ū_j)}` over ordered pairs with `u_i ≠ u_j`.
pub fn stokes_rays(u: &PointConfig) -> Vec<StokesRay> {
    let tol = u.coalescence_tol();
    let mut out = Vec::new();
    for i in 0..u.n() {
        for j in 0..u.n() {
            let d = u.u[i] - u.u[j];
            if i == j || d.norm() <= tol {
                continue;
            }
            let dir = Complex64::new(0.0, -1.0) * d.conj();
            out.push(StokesRay { i: i + 1, j: j + 1, angle: normalize_angle(dir.arg()) });
        }
    }
    out
}

/// Angular distance from `angle` to the nearest point of `{φ, φ+π}`.
fn distance_to_line(angle: f64, phi: f64) -> f64 {
    let d = (angle - phi).rem_euclid(PI);
    d.min(PI - d)
}

/// No Stokes ray within `tol` radians of either half of the line.
pub fn is_admissible(u: &PointConfig, line: &OrientedLine, tol: f64) -> bool {
    stokes_rays(u).iter().all(|r| distance_to_line(r.angle, line.phi) > tol)
}

pub const DEFAULT_ANGLE_TOL: f64 = 1e-9;

/// Labels sorted left to right along the line, coincident labels grouped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LexOrder {
    pub groups: Vec<Vec<usize>>,
}

impl LexOrder {
    /// The permutation `τ` with ties broken by index.
    pub fn flatten(&self) -> Vec<usize> {
        self.groups.iter().flatten().copied().collect()
    }

    pub fn has_ties(&self) -> bool {
        self.groups.iter().any(|g| g.len() > 1)
    }
}

impl std::fmt::Display for LexOrder {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self
            .groups
            .iter()
            .map(|g| match g.as_slice() {
                [k] => k.to_string(),
                _ => format!("{{{}}}", g.iter().map(|k| k.to_string()).collect::<Vec<_>>().join(",")),
            })
            .collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Sort by increasing `Re(u_j e^{iφ})`, refusing inadmissible lines.
pub fn lexicographic_order(u: &PointConfig, line: &OrientedLine) -> Result<LexOrder, ChamberError> {
    if !is_admissible(u, line, DEFAULT_ANGLE_TOL) {
        return Err(ChamberError::Inadmissible(line.phi));
    }
    let tol = u.coalescence_tol();
    let mut idx: Vec<usize> = (0..u.n()).collect();
    idx.sort_by(|&a, &b| line.project(u.u[a]).total_cmp(&line.project(u.u[b])).then(a.cmp(&b)));
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for k in idx {
        match groups.last_mut() {
            Some(g) if (u.u[g[0] - 1] - u.u[k]).norm() <= tol => g.push(k + 1),
            _ => groups.push(vec![k + 1]),
        }
    }
    for g in &mut groups {
        g.sort_unstable();
    }
    Ok(LexOrder { groups })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g24_u() -> PointConfig {
        let k = 4.0 * 2f64.sqrt();
        let c = |re: f64, im: f64| Complex64::new(k * re, k * im);
        PointConfig::new(vec![c(0., 0.), c(0., 0.), c(0., -1.), c(0., 1.), c(-1., 0.), c(1., 0.)]).unwrap()
    }

    #[test]
    fn g24_ray_angles_are_multiples_of_a_quarter_turn() {
        let rays = stokes_rays(&g24_u());
        assert_eq!(rays.len(), 28);
        for r in &rays {
            let m = r.angle / (PI / 4.0);
            assert!((m - m.round()).abs() < 1e-12, "{r:?}");
        }
        let r13 = rays.iter().find(|r| (r.i, r.j) == (1, 3)).unwrap();
        assert!((r13.angle - PI).abs() < 1e-12);
    }

    #[test]
    fn equal_entries_have_no_rays() {
        let u = PointConfig::new(vec![Complex64::new(2.0, 1.0); 4]).unwrap();
        assert!(stokes_rays(&u).is_empty());
    }

    #[test]
    fn g24_admissibility() {
        assert!(is_admissible(&g24_u(), &OrientedLine::new(PI / 6.0).unwrap(), DEFAULT_ANGLE_TOL));
        assert!(!is_admissible(&g24_u(), &OrientedLine::new(PI / 4.0).unwrap(), DEFAULT_ANGLE_TOL));
    }

    #[test]
    fn g24_lexicographic_order() {
        let o = lexicographic_order(&g24_u(), &OrientedLine::new(PI / 6.0).unwrap()).unwrap();
        assert_eq!(o.to_string(), "(5,4,{1,2},3,6)");
        assert_eq!(o.flatten(), vec![5, 4, 1, 2, 3, 6]);
        assert!(lexicographic_order(&g24_u(), &OrientedLine::new(PI / 4.0).unwrap()).is_err());
    }

    #[test]
    fn a3_rays_follow_twice_arg_h() {
        for arg in [0.1, 0.7, 2.0, -1.3] {
            let h = Complex64::from_polar(1.3, arg);
            let v = -h * h / 4.0;
            let u = PointConfig::new(vec![Complex64::new(0.0, 0.0), v, v]).unwrap();
            let rays = stokes_rays(&u);
            assert_eq!(rays.len(), 4);
            for r in rays {
                assert!(distance_to_line(r.angle, PI / 2.0 - 2.0 * arg) < 1e-12);
            }
        }
    }

    #[test]
    fn a3_real_line_on_the_diagonal_is_inadmissible() {
        let h = Complex64::new(1.0, 1.0);
        let v = -h * h / 4.0;
        let u = PointConfig::new(vec![Complex64::new(0.0, 0.0), v, v]).unwrap();
        assert!(!is_admissible(&u, &OrientedLine::new(0.0).unwrap(), DEFAULT_ANGLE_TOL));
        let h = Complex64::new(1.0, 0.5);
        let v = -h * h / 4.0;
        let u = PointConfig::new(vec![Complex64::new(0.0, 0.0), v, v]).unwrap();
        assert!(is_admissible(&u, &OrientedLine::new(0.0).unwrap(), DEFAULT_ANGLE_TOL));
    }

    #[test]
    fn single_point_is_identity() {
        let u = PointConfig::new(vec![Complex64::new(3.0, -1.0)]).unwrap();
        let o = lexicographic_order(&u, &OrientedLine::new(1.0).unwrap()).unwrap();
        assert_eq!(o.flatten(), vec![1]);
    }

    #[test]
    fn angles_are_normalized() {
        assert!((OrientedLine::new(-PI / 2.0).unwrap().phi() - 1.5 * PI).abs() < 1e-15);
        assert_eq!(OrientedLine::new(TAU).unwrap().phi(), 0.0);
        assert!(PointConfig::new(vec![Complex64::new(f64::NAN, 0.0)]).is_err());
    }
}
