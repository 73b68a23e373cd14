use linalg::{conj_by_zpow, SymMatrix, ZLMatrix};
use num_traits::ToPrimitive;
use symring::{BigRational, Complex64};

use crate::data::MonodromyData;
use crate::error::MonodromyError;
use crate::report::Report;

fn describe(lhs: &SymMatrix, rhs: &SymMatrix) -> String {
    let d = lhs.diff(rhs);
    match d.first() {
        None => "exact".into(),
        Some((i, j, a, b)) => format!("{} entries differ; first at ({},{}): {} vs {}", d.len(), i + 1, j + 1, a, b),
    }
}

/// The three identities on `(μ, R, η, S, C)`, each arranged so that no
/// symbolic inverse is needed:
/// `C·Sᵀ = M₀·C·S`, `C·S·Cᵀ·η = e^{−πiR}e^{−πiμ}` and `C·Sᵀ·Cᵀ·η = e^{πiR}e^{πiμ}`.
pub fn check_constraints(md: &MonodromyData) -> Result<Report, MonodromyError> {
    let st = md.s.transpose();
    let ct = md.c.transpose();
    let mut report = Report::new();

    let lhs1 = &md.c * &st;
    let rhs1 = &(&md.m0()? * &md.c) * &md.s;
    report.push("monodromy_identity", lhs1 == rhs1, describe(&lhs1, &rhs1));

    let lhs2 = &(&(&md.c * &md.s) * &ct) * &md.eta;
    let rhs2 = &md.exp_r(-1)? * &md.exp_mu(-1)?;
    report.push("pairing_with_s", lhs2 == rhs2, describe(&lhs2, &rhs2));

    let lhs3 = &(&(&md.c * &st) * &ct) * &md.eta;
    let rhs3 = &md.exp_r(1)? * &md.exp_mu(1)?;
    report.push("pairing_with_s_transpose", lhs3 == rhs3, describe(&lhs3, &rhs3));
    Ok(report)
}

/// `R ∈ 𝔤(η, μ)`: support only where `μ_α − μ_β` is a positive integer, and
/// each graded piece satisfies `R_kᵀ·η = (−1)^{k+1}·η·R_k`.
pub fn g_eta_mu_membership(r: &SymMatrix, mu: &[BigRational], eta: &SymMatrix) -> bool {
    let n = r.n();
    if mu.len() != n || eta.n() != n {
        return false;
    }
    let mut degrees = Vec::new();
    for (a, b, e) in r.entries() {
        if e.is_zero() {
            continue;
        }
        let d = &mu[a] - &mu[b];
        if !d.is_integer() || d <= BigRational::from_integer(0.into()) {
            return false;
        }
        let k = d.to_integer();
        if !degrees.contains(&k) {
            degrees.push(k);
        }
    }
    degrees.into_iter().all(|k| {
        let kq = BigRational::from_integer(k.clone());
        let rk = SymMatrix::from_fn(r.table(), n, |a, b| {
            if &mu[a] - &mu[b] == kq {
                r.get(a, b).clone()
            } else {
                symring::SymExpr::zero(r.table())
            }
        });
        let lhs = &rk.transpose() * eta;
        let rhs = eta * &rk;
        let odd = k.to_i64().is_some_and(|k| k % 2 != 0);
        if odd {
            lhs == rhs
        } else {
            lhs == -&rhs
        }
    })
}

/// Conditions defining `𝒞₀(η, μ, R)` that `G` violates; empty means member.
pub fn c0_violations(
    g: &SymMatrix,
    mu: &[BigRational],
    r: &SymMatrix,
    eta: &SymMatrix,
) -> Result<Vec<String>, MonodromyError> {
    if g.determinant().is_zero() {
        return Err(MonodromyError::Singular);
    }
    let mut out = Vec::new();
    let p = conj_by_zpow(g, mu, r)?;
    if !p.is_polynomial() {
        out.push("z^mu z^R G z^-R z^-mu is not a polynomial in z".to_string());
    } else {
        if !p.at_zero()?.is_identity() {
            out.push("P_G(0) != I".to_string());
        }
        let eta_zl = ZLMatrix::from_sym(eta);
        let lhs = &(&p.negate_z()?.transpose() * &eta_zl) * &p;
        if lhs != eta_zl {
            out.push("P_G(-z)^T eta P_G(z) != eta".to_string());
        }
    }
    if &(g * r) != &(r * g) {
        out.push("G R != R G".to_string());
    }
    Ok(out)
}

pub fn c0_membership(g: &SymMatrix, mu: &[BigRational], r: &SymMatrix, eta: &SymMatrix) -> Result<bool, MonodromyError> {
    Ok(c0_violations(g, mu, r, eta)?.is_empty())
}

/// Default coalescence tolerance `10⁻⁹·max|u_i|`.
pub fn default_coalescence_tol(u: &[Complex64]) -> f64 {
    1e-9 * u.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// `S_ij = S_ji = 0` whenever `|u_i − u_j| ≤ tol`.
pub fn coalescence_vanishing_check(s: &SymMatrix, u: &[Complex64], tol: f64) -> bool {
    let n = s.n();
    (0..n).all(|i| {
        (0..n).all(|j| i == j || (u[i] - u[j]).norm() > tol || (s.get(i, j).is_zero() && s.get(j, i).is_zero()))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;
    use symring::{rat, SymExpr, SymbolTable};

    fn t() -> Arc<SymbolTable> {
        SymbolTable::standard()
    }

    #[test]
    fn zero_r_is_in_g() {
        let eta = SymMatrix::from_ints(&t(), &[&[0, 1], &[1, 0]]).unwrap();
        assert!(g_eta_mu_membership(&SymMatrix::zeros(&t(), 2), &[rat(-1, 2), rat(1, 2)], &eta));
    }

    #[test]
    fn degree_one_piece_must_be_eta_symmetric() {
        let eta = SymMatrix::from_ints(&t(), &[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]]).unwrap();
        let mu = [rat(-1, 1), rat(0, 1), rat(1, 1)];
        let good = SymMatrix::from_ints(&t(), &[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0]]).unwrap();
        assert!(g_eta_mu_membership(&good, &mu, &eta));
        let bad = SymMatrix::from_ints(&t(), &[&[0, 0, 0], &[1, 0, 0], &[0, 2, 0]]).unwrap();
        assert!(!g_eta_mu_membership(&bad, &mu, &eta));
        assert!(!g_eta_mu_membership(&good.transpose(), &mu, &eta));
    }

    #[test]
    fn coalescence_examples() {
        let u = [Complex64::new(1.0, 0.0), Complex64::new(1.0, 0.0)];
        let id = SymMatrix::identity(&t(), 2);
        assert!(coalescence_vanishing_check(&id, &u, 1e-12));
        let mut s = id.clone();
        s.set(0, 1, SymExpr::one(&t()));
        assert!(!coalescence_vanishing_check(&s, &u, 1e-12));
        let apart = [Complex64::new(1.0, 0.0), Complex64::new(2.0, 0.0)];
        assert!(coalescence_vanishing_check(&s, &apart, default_coalescence_tol(&apart)));
    }

    #[test]
    fn singular_gauge_is_an_error() {
        let eta = SymMatrix::from_ints(&t(), &[&[0, 1], &[1, 0]]).unwrap();
        let z = SymMatrix::zeros(&t(), 2);
        assert_eq!(c0_membership(&z, &[rat(0, 1), rat(0, 1)], &z, &eta), Err(MonodromyError::Singular));
    }
}
