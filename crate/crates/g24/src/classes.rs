use std::sync::Arc;

use linalg::SymMatrix;
use num_traits::{One, Zero};
use symring::{BigRational, GaussianRational, SymExpr, SymbolTable};

use crate::cohom::{CohClass, TOP_DEGREE};

/// Young diagrams in a 2×2 box, in the order of the Kapranov collection.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Young {
    Empty,
    One,
    Two,
    OneOne,
    TwoOne,
    TwoTwo,
}

pub const KAPRANOV_ORDER: [Young; 6] = [Young::Empty, Young::One, Young::Two, Young::OneOne, Young::TwoOne, Young::TwoTwo];

impl Young {
    pub fn label(&self) -> &'static str {
        match self {
            Young::Empty => "0",
            Young::One => "1",
            Young::Two => "2",
            Young::OneOne => "(1,1)",
            Young::TwoOne => "(2,1)",
            Young::TwoTwo => "(2,2)",
        }
    }

    pub fn parse(s: &str) -> Option<Young> {
        KAPRANOV_ORDER.iter().copied().find(|y| y.label() == s || y.label().replace(['(', ')', ','], "") == s)
    }
}

fn sym(t: &Arc<SymbolTable>, s: &str) -> SymExpr {
    SymExpr::parse_in(t, s).expect("constant expression")
}

fn rational(t: &Arc<SymbolTable>, q: &BigRational) -> SymExpr {
    SymExpr::constant(t, GaussianRational::from_rational(q.clone()))
}

fn factorial(n: usize) -> i64 {
    (1..=n as i64).product()
}

/// Power sums `p_k = x₁^k + x₂^k` of the Chern roots of `𝓢*`, `k = 0..=4`,
/// from `e₁ = σ₁`, `e₂ = σ₁,₁` by Newton's identities.
pub fn power_sums(t: &Arc<SymbolTable>) -> Vec<CohClass> {
    let e1 = CohClass::basis(t, 1);
    let e2 = CohClass::basis(t, 3);
    let mut p = vec![CohClass::one(t).scale(&SymExpr::int(t, 2)), e1.clone()];
    for k in 2..=TOP_DEGREE {
        let next = &e1.cup(&p[k - 1]) - &e2.cup(&p[k - 2]);
        p.push(next);
    }
    p
}

/// `e^{s x₁} + e^{s x₂}`.
pub fn ch_dual_tautological(t: &Arc<SymbolTable>, s: &SymExpr) -> CohClass {
    let p = power_sums(t);
    let mut out = CohClass::zero(t);
    for (k, pk) in p.iter().enumerate() {
        let c = &s.pow(k as u32) * &SymExpr::ratio(t, 1, factorial(k));
        out = &out + &pk.scale(&c);
    }
    out
}

/// The Schur polynomial `s_λ(a, b)` with `a = e^{s x₁}`, `b = e^{s x₂}`.
pub fn schur_ch(t: &Arc<SymbolTable>, y: Young, s: &SymExpr) -> CohClass {
    let sum = ch_dual_tautological(t, s);
    let prod = CohClass::basis(t, 1).scale(s).exp_nilpotent();
    match y {
        Young::Empty => CohClass::one(t),
        Young::One => sum,
        Young::Two => &sum.cup(&sum) - &prod,
        Young::OneOne => prod,
        Young::TwoOne => sum.cup(&prod),
        Young::TwoTwo => prod.cup(&prod),
    }
}

/// `Ch(𝕊^λ𝓢*)` with the `2πi` normalization.
pub fn chern_character(t: &Arc<SymbolTable>, y: Young) -> CohClass {
    schur_ch(t, y, &sym(t, "2*i*pi"))
}

/// `ch(T𝔾) = ch(𝓢*)·(4 − ch(𝓢))`.
pub fn ch_tangent(t: &Arc<SymbolTable>) -> CohClass {
    let four = CohClass::one(t).scale(&SymExpr::int(t, 4));
    let s_star = ch_dual_tautological(t, &SymExpr::one(t));
    let s = ch_dual_tautological(t, &SymExpr::int(t, -1));
    s_star.cup(&(&four - &s))
}

/// Power sums `P_n = n!·ch_n(T𝔾)` of the Chern roots of the tangent bundle, `n = 0..=4`.
pub fn tangent_power_sums(t: &Arc<SymbolTable>) -> Vec<CohClass> {
    let ch = ch_tangent(t);
    (0..=TOP_DEGREE).map(|n| ch.part(n).scale(&SymExpr::int(t, factorial(n)))).collect()
}

/// The multiplicative class `Π_j F(δ_j) = exp(Σ_k f_k P_k)`, where `log F = Σ f_k x^k`.
pub fn multiplicative_class(t: &Arc<SymbolTable>, log_coeffs: &[SymExpr]) -> CohClass {
    let p = tangent_power_sums(t);
    let mut arg = CohClass::zero(t);
    for (k, f) in log_coeffs.iter().enumerate().skip(1).take(TOP_DEGREE) {
        arg = &arg + &p[k].scale(f);
    }
    arg.exp_nilpotent()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GammaSign {
    Plus,
    Minus,
}

impl GammaSign {
    pub fn parse(s: &str) -> Option<GammaSign> {
        match s {
            "+" | "plus" => Some(GammaSign::Plus),
            "-" | "minus" => Some(GammaSign::Minus),
            _ => None,
        }
    }

    pub fn symbol(&self) -> &'static str {
        match self {
            GammaSign::Plus => "+",
            GammaSign::Minus => "-",
        }
    }
}

/// `log Γ(1 ∓ x) = ±γx + Σ_{n≥2} (±1)^n ζ(n)xⁿ/n` through `x⁴`, with `ζ(2) = π²/6`, `ζ(4) = π⁴/90`.
pub fn log_gamma_coeffs(t: &Arc<SymbolTable>, sign: GammaSign) -> Vec<SymExpr> {
    let e = match sign {
        GammaSign::Minus => 1,
        GammaSign::Plus => -1,
    };
    let zeta = [sym(t, "pi^2/6"), sym(t, "zeta3"), sym(t, "pi^4/90")];
    let mut out = vec![SymExpr::zero(t), &sym(t, "gamma") * &SymExpr::int(t, e)];
    for n in 2..=4usize {
        let s = if n % 2 == 0 { 1 } else { e };
        out.push(&zeta[n - 2] * &SymExpr::ratio(t, s, n as i64));
    }
    out
}

/// `Γ̂^±(𝔾) = Π_j Γ(1 ± δ_j)`; `Minus` is the class `Γ̂⁻`.
pub fn gamma_class(t: &Arc<SymbolTable>, sign: GammaSign) -> CohClass {
    multiplicative_class(t, &log_gamma_coeffs(t, sign))
}

/// Truncated power series with rational coefficients, index = degree.
pub fn series_log(a: &[BigRational]) -> Vec<BigRational> {
    assert!(a.first().is_some_and(|c| c.is_one()), "log needs constant term 1");
    let n = a.len();
    let x: Vec<BigRational> = (0..n).map(|k| if k == 0 { BigRational::zero() } else { a[k].clone() }).collect();
    let mut out = vec![BigRational::zero(); n];
    let mut power = {
        let mut p = vec![BigRational::zero(); n];
        p[0] = BigRational::one();
        p
    };
    for k in 1..n {
        let mut next = vec![BigRational::zero(); n];
        for i in 0..n {
            for j in 0..n - i {
                next[i + j] += &power[i] * &x[j];
            }
        }
        power = next;
        let c = BigRational::new(if k % 2 == 1 { 1.into() } else { (-1).into() }, (k as i64).into());
        for d in 0..n {
            out[d] += &power[d] * &c;
        }
    }
    out
}

/// Coefficients of `log(x/(1 − e^{−x}))` through `x⁴`.
pub fn todd_log_coeffs() -> Vec<BigRational> {
    let f: Vec<BigRational> =
        (0..=TOP_DEGREE).map(|k| BigRational::new(if k % 2 == 0 { 1.into() } else { (-1).into() }, factorial(k + 1).into())).collect();
    series_log(&f).into_iter().map(|c| -c).collect()
}

pub fn todd_class(t: &Arc<SymbolTable>) -> CohClass {
    let l: Vec<SymExpr> = todd_log_coeffs().iter().map(|q| rational(t, q)).collect();
    multiplicative_class(t, &l)
}

/// `χ(E, F) = ∫ ch(E^∨)·ch(F)·td(T𝔾)` over the Kapranov collection, and the Todd class used.
pub fn todd_and_gram(t: &Arc<SymbolTable>) -> (CohClass, SymMatrix) {
    let td = todd_class(t);
    let one = SymExpr::one(t);
    let minus = SymExpr::int(t, -1);
    let ch: Vec<CohClass> = KAPRANOV_ORDER.iter().map(|&y| schur_ch(t, y, &one)).collect();
    let ch_dual: Vec<CohClass> = KAPRANOV_ORDER.iter().map(|&y| schur_ch(t, y, &minus)).collect();
    let g = SymMatrix::from_fn(t, 6, |i, j| ch_dual[i].cup(&ch[j]).cup(&td).integral().clone());
    (td, g)
}

/// Columns `(1/(4π²√c))·Γ̂^±(𝔾) ∪ Ch(𝕊^λ𝓢*)` in the Kapranov order.
pub fn c_kap(t: &Arc<SymbolTable>, sign: GammaSign) -> SymMatrix {
    let gam = gamma_class(t, sign);
    let pref = sym(t, "1/(4*pi^2*c12)");
    let cols: Vec<CohClass> = KAPRANOV_ORDER.iter().map(|&y| gam.cup(&chern_character(t, y)).scale(&pref)).collect();
    SymMatrix::from_fn(t, 6, |i, j| cols[j].coeff(i).clone())
}

/// `λ_F` with `F̂(T𝔾) ∪ λ_F = F̂(T*𝔾)`, for `F = 1 + F₁t + … + F₄t⁴`.
pub fn lambda_f(t: &Arc<SymbolTable>, f: &[BigRational]) -> CohClass {
    let mut series = vec![BigRational::one()];
    series.extend(f.iter().take(TOP_DEGREE).cloned());
    series.resize(TOP_DEGREE + 1, BigRational::zero());
    let l = series_log(&series);
    let inverse: Vec<SymExpr> = l.iter().map(|q| rational(t, &-q)).collect();
    let dual: Vec<SymExpr> = l.iter().enumerate().map(|(k, q)| rational(t, &if k % 2 == 0 { q.clone() } else { -q })).collect();
    multiplicative_class(t, &dual).cup(&multiplicative_class(t, &inverse))
}
