use std::sync::Arc;

use chambers::{track_samples, uniform_grid, OrientedLine, PointConfig, TrackResult};
use linalg::SymMatrix;
use monodromy::{
    apply_braid, apply_gauge, apply_permutation, apply_signs, braid_word_matrix, center_braid, check_constraints,
    BraidWord, MonodromyData, Report,
};
use num_traits::Zero;
use symring::{BigRational, Complex64, GaussianRational, SymExpr, SymbolTable};

use crate::classes::{c_kap, GammaSign};
use crate::error::G24Error;
use crate::reference::*;

fn describe(a: &SymMatrix, b: &SymMatrix) -> String {
    match a.diff(b).first() {
        None => "exact".into(),
        Some((i, j, x, y)) => format!("first difference at ({},{}): {} vs {}", i + 1, j + 1, x, y),
    }
}

fn push_eq(r: &mut Report, name: &str, a: &SymMatrix, b: &SymMatrix) {
    r.push(name, a == b, describe(a, b));
}

fn push_constraints(r: &mut Report, name: &str, md: &MonodromyData) {
    match check_constraints(md) {
        Ok(c) => {
            let failed: Vec<&str> = c.checks.iter().filter(|k| !c.passed(&k.name)).map(|k| k.name.as_str()).collect();
            r.push(name, failed.is_empty(), if failed.is_empty() { "all three identities".into() } else { failed.join(", ") });
        }
        Err(e) => r.push_error(name, e.to_string()),
    }
}

/// `ΨᵀΨ = η` and `Ψ𝓤 = UΨ` at `t = 0`, `q = 1`.
pub fn psi_check_g24() -> Report {
    let t = table();
    let psi = psi_g24(&t);
    let mut r = Report::new();
    push_eq(&mut r, "psi_transpose_psi_is_eta", &(&psi.transpose() * &psi), &g24_eta(&t));
    let u_op = quantum_mult_matrix(&t, &SymExpr::int(&t, 4), &SymExpr::zero(&t), &SymExpr::one(&t));
    push_eq(&mut r, "psi_diagonalizes_euler_multiplication", &(&psi * &u_op), &(&u_matrix(&t) * &psi));
    let expected = SymExpr::parse_in(&t, "-i*c12/2").expect("constant");
    r.push("psi_11", psi.get(0, 0) == &expected, format!("{}", psi.get(0, 0)));
    r
}

/// The three constraints on `(μ, R, η, S(v), C(v))` with `v` left free.
pub fn identity_in_v() -> Report {
    let t = table();
    match check_constraints(&g24_data_v(&t)) {
        Ok(r) => r,
        Err(e) => {
            let mut r = Report::new();
            r.push_error("constraints", e.to_string());
            r
        }
    }
}

fn rational_coefficient(e: &SymExpr) -> Result<BigRational, G24Error> {
    e.is_real_rational().ok_or_else(|| G24Error::Invalid(format!("coefficient {e} is not rational")))
}

/// The value of `v` for which `S₄₅ = 0` and `S₅₅ = 1`.
pub fn solve_v() -> Result<BigRational, G24Error> {
    let t = table();
    let s = s_of_v(&t);
    let coeffs = s.get(3, 4).coefficients_in("v")?;
    let c0 = coeffs.get(&0).map(rational_coefficient).transpose()?.unwrap_or_else(BigRational::zero);
    let c1 = coeffs.get(&1).map(rational_coefficient).transpose()?.unwrap_or_else(BigRational::zero);
    if coeffs.keys().any(|&k| k != 0 && k != 1) {
        return Err(G24Error::Invalid("S45 is not linear in v".into()));
    }
    if c1.is_zero() {
        return Err(G24Error::NoSolution("S45 does not depend on v".into()));
    }
    let v = -c0 / c1;
    let vs = SymExpr::constant(&t, GaussianRational::from_rational(v.clone()));
    let s55 = s.get(4, 4).substitute("v", &vs)?;
    if !s55.is_one() {
        return Err(G24Error::NoSolution(format!("S55 = {s55} at v = {v}")));
    }
    Ok(v)
}

/// Constraints of `S(6), C(6)`, the identity in `v`, and the value of `v`.
pub fn verify_g24() -> Report {
    let mut r = Report::new();
    push_constraints(&mut r, "constraints_at_v6", &g24_reference());
    r.extend_prefixed("identity_in_v", identity_in_v());
    match solve_v() {
        Ok(v) => r.push("solve_v", v == BigRational::from_integer(6.into()), format!("v = {v}")),
        Err(e) => r.push_error("solve_v", e.to_string()),
    }
    r.extend_prefixed("psi", psi_check_g24());
    r
}

fn run_branch(r: &mut Report, t: &Arc<SymbolTable>, b: &KapranovBranch) -> Result<MonodromyData, G24Error> {
    let md = g24_reference();
    let md = apply_permutation(&md, &b.tau)?;
    push_constraints(r, &format!("{}_after_permutation", b.name), &md);
    let md = apply_signs(&md, &b.signs)?;
    push_constraints(r, &format!("{}_after_signs", b.name), &md);
    let md = apply_gauge(&md, &gauge_a(t))?;
    push_constraints(r, &format!("{}_after_gauge_a", b.name), &md);
    let md = apply_braid(&md, &b.word)?;
    push_constraints(r, &format!("{}_after_braid", b.name), &md);
    Ok(md)
}

/// The passage from `(S(6), C(6))` to the Kapranov collection, along both branches.
pub fn verify_resultg24() -> Report {
    let t = table();
    let mut r = Report::new();
    let c_minus = c_kap_minus_reference(&t);
    let c_plus = c_kap(&t, GammaSign::Plus);
    push_eq(&mut r, "c_kap_minus_from_classes", &c_kap(&t, GammaSign::Minus), &c_minus);
    push_eq(&mut r, "s_kap_times_gram", &(&s_kap(&t) * &g_kap(&t)), &SymMatrix::identity(&t, 6));
    push_eq(&mut r, "gauge_b_maps_c_kap_minus_to_plus", &(&gauge_b(&t) * &c_minus), &c_plus);
    for b in kapranov_branches() {
        match run_branch(&mut r, &t, &b) {
            Ok(md) => {
                push_eq(&mut r, &format!("{}_c_is_c_kap_minus", b.name), &md.c, &c_minus);
                push_eq(&mut r, &format!("{}_s_inverse_is_gram", b.name), &(&md.s * &g_kap(&t)), &SymMatrix::identity(&t, 6));
                match apply_gauge(&md, &gauge_b(&t)) {
                    Ok(plus) => {
                        push_eq(&mut r, &format!("{}_gauge_b_gives_c_kap_plus", b.name), &plus.c, &c_plus);
                        push_constraints(&mut r, &format!("{}_after_gauge_b", b.name), &plus);
                    }
                    Err(e) => r.push_error(format!("{}_gauge_b_gives_c_kap_plus", b.name), e.to_string()),
                }
            }
            Err(e) => r.push_error(format!("{}_pipeline", b.name), e.to_string()),
        }
    }
    r
}

/// One row of the band table as reproduced.
#[derive(Clone, Debug, PartialEq)]
pub struct BandRow {
    pub band: usize,
    pub label: String,
    pub word: BraidWord,
    pub data: MonodromyData,
}

/// The data of every band, starting from band `𝓗₀` and applying the step words.
pub fn band_rows() -> Result<Vec<BandRow>, G24Error> {
    let md = apply_signs(&apply_permutation(&g24_reference(), &BAND_TAU)?, &BAND_SIGNS)?;
    let mut rows = vec![BandRow { band: 0, label: band_label(0), word: BraidWord::empty(), data: md }];
    for k in 0..BAND_COUNT - 1 {
        let prev = &rows[k];
        let data = apply_braid(&prev.data, &band_step(k))?;
        let word = prev.word.concat(&band_step(k));
        rows.push(BandRow { band: k + 1, label: band_label(k + 1), word, data });
    }
    Ok(rows)
}

pub fn band_table() -> Report {
    let t = table();
    let mut r = Report::new();
    let rows = match band_rows() {
        Ok(rows) => rows,
        Err(e) => {
            r.push_error("band_rows", e.to_string());
            return r;
        }
    };
    for row in &rows {
        push_eq(&mut r, &format!("band_{}_s", row.band), &row.data.s, &band_s(&t, row.band));
        push_constraints(&mut r, &format!("band_{}_constraints", row.band), &row.data);
    }
    let (first, last) = (&rows[0].data, &rows[BAND_COUNT - 1].data);
    push_eq(&mut r, "full_word_fixes_s", &last.s, &first.s);
    match first.m0_inv() {
        Ok(m) => push_eq(&mut r, "full_word_multiplies_c_by_m0_inverse", &last.c, &(&m * &first.c)),
        Err(e) => r.push_error("full_word_multiplies_c_by_m0_inverse", e.to_string()),
    }
    let full = &rows[BAND_COUNT - 1].word;
    match (braid_word_matrix(&first.s, full), braid_word_matrix(&first.s, &center_braid(6))) {
        (Ok(a), Ok(b)) => push_eq(&mut r, "full_word_acts_as_centre", &a, &b),
        _ => r.push_error("full_word_acts_as_centre", "braid word out of range"),
    }
    r
}

/// `z^{−μ}(η⁻¹S(0,z)η)z^μ` against the displayed matrix, through `z⁸` where the truncation determines it.
pub fn levelt_conjugation_check() -> Report {
    let t = table();
    let mut r = Report::new();
    let cinv = SymExpr::parse_in(&t, "c^-1").expect("constant");
    let eta = g24_eta(&t);
    let eta_inv = SymMatrix::from_fn(&t, 6, |i, j| if eta.get(i, j).is_zero() { SymExpr::zero(&t) } else { cinv.clone() });
    push_eq(&mut r, "eta_inverse", &(&eta_inv * &eta), &SymMatrix::identity(&t, 6));
    let conj = &(&eta_inv * &levelt_series(&t)) * &eta;
    let mu = g24_mu();
    let neg_mu: Vec<BigRational> = mu.iter().map(|m| -m).collect();
    let zl = match zl_from_q(&conj, 4).and_then(|m| Ok(m.scale_by_zpow(&neg_mu, &mu)?)) {
        Ok(m) => m,
        Err(e) => {
            r.push_error("conjugate", e.to_string());
            return r;
        }
    };
    let target = match zl_from_q(&levelt_target(&t), 8) {
        Ok(m) => m,
        Err(e) => {
            r.push_error("target", e.to_string());
            return r;
        }
    };
    r.push("no_logarithms", !zl.has_log(), "");
    r.push("no_negative_powers", !zl.has_negative_power(), "");
    let mut mismatches = Vec::new();
    let mut compared = 0;
    for a in 0..6 {
        for b in 0..6 {
            let known = BigRational::from_integer(4.into()) + &mu[b] - &mu[a];
            for k in 0..=8i32 {
                if BigRational::from_integer(k.into()) > known {
                    break;
                }
                compared += 1;
                let x = zl.get(a, b).coeff(4 * k, 0);
                let y = target.get(a, b).coeff(4 * k, 0);
                if x != y {
                    mismatches.push(format!("({},{}) z^{k}: {x} vs {y}", a + 1, b + 1));
                }
            }
        }
    }
    r.push(
        "matches_display",
        mismatches.is_empty(),
        if mismatches.is_empty() { format!("{compared} coefficients") } else { mismatches.join("; ") },
    );
    match zl.at_zero() {
        Ok(m) => r.push("identity_at_zero", m.is_identity(), ""),
        Err(e) => r.push_error("identity_at_zero", e.to_string()),
    }
    r
}

/// The split configuration `[−d, d, −ik, ik, −k, k]·e^{is/4}` with `k = 4√2`, `d = 10⁻³e^{iα}`.
pub fn band_crossing_point(s: f64, alpha: f64) -> PointConfig {
    let k = 4.0 * std::f64::consts::SQRT_2;
    let d = Complex64::from_polar(1e-3, alpha);
    let i = Complex64::i();
    let base = [-d, d, -i * k, i * k, Complex64::new(-k, 0.0), Complex64::new(k, 0.0)];
    let rot = Complex64::from_polar(1.0, s / 4.0);
    PointConfig::new(base.iter().map(|z| z * rot).collect()).expect("finite")
}

/// The path from band `𝓗₀` to `𝓗₁`, `s ∈ [0, 2π/3]`, sampled uniformly. For
/// `α ∈ (π/6, π/3]` mod `π` the split pair itself also crosses a Stokes ray.
pub fn band_crossing_path(alpha: f64, samples: usize) -> Vec<PointConfig> {
    let end = 2.0 * std::f64::consts::PI / 3.0;
    uniform_grid(samples).into_iter().map(|x| band_crossing_point(x * end, alpha)).collect()
}

pub fn band_crossing_line() -> OrientedLine {
    OrientedLine::new(std::f64::consts::PI / 6.0).expect("finite angle")
}

pub fn track_band_crossing(alpha: f64) -> Result<TrackResult, G24Error> {
    Ok(track_samples(&band_crossing_path(alpha, 2001), &band_crossing_line())?)
}
