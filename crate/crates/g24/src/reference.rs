use std::sync::Arc;

use linalg::{SymMatrix, ZLMatrix};
use monodromy::{BraidWord, MonodromyData};
use symring::{rat, BigRational, Complex64, SymExpr, SymbolTable};

use crate::error::G24Error;

pub fn table() -> Arc<SymbolTable> {
    SymbolTable::standard()
}

fn sym(t: &Arc<SymbolTable>, s: &str) -> SymExpr {
    SymExpr::parse_in(t, s).expect("well-formed constant")
}

fn parse6(t: &Arc<SymbolTable>, rows: &[[&str; 6]; 6]) -> SymMatrix {
    let r: Vec<&[&str]> = rows.iter().map(|r| r.as_slice()).collect();
    SymMatrix::parse(t, &r).expect("well-formed constant matrix")
}

fn ints6(t: &Arc<SymbolTable>, rows: [[i64; 6]; 6]) -> SymMatrix {
    let r: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
    SymMatrix::from_ints(t, &r).expect("square")
}

fn from_columns(t: &Arc<SymbolTable>, cols: &[[&str; 6]; 6]) -> SymMatrix {
    SymMatrix::from_fn(t, 6, |i, j| sym(t, cols[j][i]))
}

pub fn g24_mu() -> Vec<BigRational> {
    [-2, -1, 0, 0, 1, 2].iter().map(|&k| rat(k, 1)).collect()
}

/// `η(σ_λ, σ_μ) = c` on complementary pairs.
pub fn g24_eta(t: &Arc<SymbolTable>) -> SymMatrix {
    let c = sym(t, "c");
    SymMatrix::from_fn(t, 6, |i, j| if (i, j) == (2, 2) || (i, j) == (3, 3) || (i != 2 && i != 3 && i + j == 5) { c.clone() } else { SymExpr::zero(t) })
}

/// Classical multiplication by `c₁ = 4σ₁`.
pub fn g24_r(t: &Arc<SymbolTable>) -> SymMatrix {
    let mut r = SymMatrix::zeros(t, 6);
    for (i, j) in [(1, 0), (2, 1), (3, 1), (4, 2), (4, 3), (5, 4)] {
        r.set(i, j, SymExpr::int(t, 4));
    }
    r
}

/// The Stokes matrix with the free parameter `v`.
pub fn s_of_v(t: &Arc<SymbolTable>) -> SymMatrix {
    parse6(
        t,
        &[
            ["1", "0", "4", "0", "0", "4"],
            ["0", "1", "4", "0", "0", "4"],
            ["0", "0", "1", "0", "0", "6"],
            ["-4", "-4", "-16", "1", "6 - v", "-6"],
            ["4*(v - 1)", "4*(v - 1)", "16*v - 26", "-v", "(v - 6)*v + 1", "6*v - 16"],
            ["0", "0", "0", "0", "0", "1"],
        ],
    )
}

const C1: [&str; 6] = [
    "1/(2*pi^2*c12)",
    "(4*gamma + i*pi)/(2*pi^2*c12)",
    "(48*gamma^2 + 24*i*gamma*pi - 5*pi^2)/(12*pi^2*c12)",
    "(48*gamma^2 + 24*i*gamma*pi + 7*pi^2)/(12*pi^2*c12)",
    "(64*gamma^3 + 48*i*gamma^2*pi + 4*gamma*pi^2 + 3*i*pi^3 - 4*zeta3)/(6*pi^2*c12)",
    "(768*gamma^4 + 768*i*gamma^3*pi + 96*gamma^2*pi^2 + 144*i*gamma*pi^3 - pi^4 - 48*(4*gamma + i*pi)*zeta3)/(72*pi^2*c12)",
];

const C2: [&str; 6] = [C1[0], C1[1], C1[3], C1[2], C1[4], C1[5]];

const C3: [&str; 6] = [
    "-1/(4*pi^2*c12)",
    "(-2*gamma - i*pi)/(2*pi^2*c12)",
    "(-48*gamma^2 - 48*i*gamma*pi + 11*pi^2)/(24*pi^2*c12)",
    "(-48*gamma^2 - 48*i*gamma*pi + 11*pi^2)/(24*pi^2*c12)",
    "(2*zeta3 - (2*gamma + i*pi)*(4*gamma + i*pi)*(4*gamma + 3*i*pi))/(6*pi^2*c12)",
    "(-768*gamma^4 - 1536*i*gamma^3*pi + 1056*gamma^2*pi^2 - 23*pi^4 + 96*i*pi*zeta3 + 96*gamma*(3*i*pi^3 + 2*zeta3))/(144*pi^2*c12)",
];

const C4: [&str; 6] = [
    "(v - 1)/(4*pi^2*c12)",
    "(2*gamma*(v - 1) + i*pi)/(2*pi^2*c12)",
    "(48*gamma^2*(v - 1) + 48*i*gamma*pi + (v + 11)*pi^2)/(24*pi^2*c12)",
    "(48*gamma^2*(v - 1) + 48*i*gamma*pi + (v + 11)*pi^2)/(24*pi^2*c12)",
    "(32*gamma^3*(v - 1) + 48*i*gamma^2*pi + 2*gamma*(v + 11)*pi^2 - 3*i*pi^3 - 2*(v - 1)*zeta3)/(6*pi^2*c12)",
    "(768*gamma^4*(v - 1) + 1536*i*gamma^3*pi + 96*gamma^2*(v + 11)*pi^2 - (v + 23)*pi^4 - 96*i*pi*zeta3 + 96*gamma*(-3*i*pi^3 - 2*(v - 1)*zeta3))/(144*pi^2*c12)",
];

const C5: [&str; 6] = [
    "1/(4*pi^2*c12)",
    "gamma/(pi^2*c12)",
    "(48*gamma^2 + pi^2)/(24*pi^2*c12)",
    "(48*gamma^2 + pi^2)/(24*pi^2*c12)",
    "(-zeta3 + 16*gamma^3 + gamma*pi^2)/(3*pi^2*c12)",
    "-(192*gamma*zeta3 - 768*gamma^4 + pi^4 - 96*gamma^2*pi^2)/(144*pi^2*c12)",
];

const C6: [&str; 6] = [
    "1/(4*pi^2*c12)",
    "(gamma + i*pi)/(pi^2*c12)",
    "(48*gamma^2 + 96*i*gamma*pi - 47*pi^2)/(24*pi^2*c12)",
    "(48*gamma^2 + 96*i*gamma*pi - 47*pi^2)/(24*pi^2*c12)",
    "((gamma + i*pi)*(4*gamma + 3*i*pi)*(4*gamma + 5*i*pi) - zeta3)/(3*pi^2*c12)",
    "(768*gamma^4 + 3072*i*gamma^3*pi - 4512*gamma^2*pi^2 - 2880*i*gamma*pi^3 + 671*pi^4 - 192*(gamma + i*pi)*zeta3)/(144*pi^2*c12)",
];

/// The central connection matrix with the free parameter `v`, column by column.
pub fn c_of_v(t: &Arc<SymbolTable>) -> SymMatrix {
    from_columns(t, &[C1, C2, C3, C4, C5, C6])
}

/// `(μ, R, η, S(v), C(v))` at the point `t = 0` with `q = 1`. The entry
/// `S₅₅ = (v−6)v+1` is not `1` for generic `v`, so the unit-diagonal
/// invariant is not checked here.
pub fn g24_data_v(t: &Arc<SymbolTable>) -> MonodromyData {
    MonodromyData {
        mu: g24_mu(),
        r: g24_r(t),
        eta: g24_eta(t),
        s: s_of_v(t),
        c: c_of_v(t),
        u: Some(canonical_small(Complex64::new(1.0, 0.0))),
    }
}

pub fn with_v(md: &MonodromyData, v: &SymExpr) -> Result<MonodromyData, G24Error> {
    let out = MonodromyData { s: md.s.substitute("v", v)?, c: md.c.substitute("v", v)?, ..md.clone() };
    out.validate()?;
    Ok(out)
}

/// The data at the true value `v = 6`.
pub fn g24_reference() -> MonodromyData {
    let t = table();
    with_v(&g24_data_v(&t), &SymExpr::int(&t, 6)).expect("substitution")
}

/// Matrix of `(λσ₁ + μσ₁,₁) ∘_q`, columns are images of `σ₀, σ₁, σ₂, σ₁,₁, σ₂,₁, σ₂,₂`.
pub fn quantum_mult_matrix(t: &Arc<SymbolTable>, lambda: &SymExpr, mu: &SymExpr, q: &SymExpr) -> SymMatrix {
    let z = SymExpr::zero(t);
    let (l, m) = (lambda.clone(), mu.clone());
    let (lq, mq) = (lambda * q, mu * q);
    SymMatrix::from_rows(
        t,
        vec![
            vec![z.clone(), z.clone(), mq.clone(), z.clone(), lq.clone(), z.clone()],
            vec![l.clone(), z.clone(), z.clone(), z.clone(), mq.clone(), lq],
            vec![z.clone(), l.clone(), z.clone(), z.clone(), z.clone(), mq],
            vec![m.clone(), l.clone(), z.clone(), z.clone(), z.clone(), z.clone()],
            vec![z.clone(), m.clone(), l.clone(), l.clone(), z.clone(), z.clone()],
            vec![z.clone(), z.clone(), z.clone(), m, l, z],
        ],
    )
    .expect("square")
}

/// `u = 4√2·q^{1/4}·(0, 0, −i, i, −1, 1)` on the principal branch.
pub fn canonical_small(q: Complex64) -> Vec<Complex64> {
    let k = 4.0 * std::f64::consts::SQRT_2 * q.powf(0.25);
    let i = Complex64::i();
    [Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0), -i, i, Complex64::new(-1.0, 0.0), Complex64::new(1.0, 0.0)]
        .iter()
        .map(|z| z * k)
        .collect()
}

/// `diag(u)` at `q = 1`, exactly.
pub fn u_matrix(t: &Arc<SymbolTable>) -> SymMatrix {
    let d: Vec<SymExpr> = ["0", "0", "-4*i*s2", "4*i*s2", "-4*s2", "4*s2"].iter().map(|s| sym(t, s)).collect();
    SymMatrix::diag(t, &d)
}

/// The matrix `Ψ` at `t = 0`, `q = 1`.
pub fn psi_g24(t: &Arc<SymbolTable>) -> SymMatrix {
    let m = parse6(
        t,
        &[
            ["-i", "0", "-1", "1", "0", "i"],
            ["-i", "0", "1", "-1", "0", "i"],
            ["s2/2", "-i", "-s2/2", "-s2/2", "i", "s2/2"],
            ["s2/2", "i", "-s2/2", "-s2/2", "-i", "s2/2"],
            ["s2/2", "-1", "s2/2", "s2/2", "-1", "s2/2"],
            ["s2/2", "1", "s2/2", "s2/2", "1", "s2/2"],
        ],
    );
    m.scale(&sym(t, "c12/2"))
}

/// The matrix of `𝒞₀` with parameters `α₁, …, α₅`.
pub fn group_member(t: &Arc<SymbolTable>, a: &[SymExpr; 5]) -> SymMatrix {
    let (o, z) = (SymExpr::one(t), SymExpr::zero(t));
    let [a1, a2, a3, a4, a5] = a.clone();
    SymMatrix::from_rows(
        t,
        vec![
            vec![o.clone(), z.clone(), z.clone(), z.clone(), z.clone(), z.clone()],
            vec![a1.clone(), o.clone(), z.clone(), z.clone(), z.clone(), z.clone()],
            vec![a2.clone(), a1.clone(), o.clone(), z.clone(), z.clone(), z.clone()],
            vec![a3.clone(), a1.clone(), z.clone(), o.clone(), z.clone(), z.clone()],
            vec![a4.clone(), &a2 + &a3, a1.clone(), a1.clone(), o.clone(), z.clone()],
            vec![a5, a4, a3, a2, a1, o],
        ],
    )
    .expect("square")
}

/// The two defining equations `α₁² − α₂ − α₃` and `α₂² + α₃² − 2α₁α₄ + 2α₅`.
pub fn group_constraints(a: &[SymExpr; 5]) -> [SymExpr; 2] {
    let t = a[0].table();
    let two = SymExpr::int(t, 2);
    [
        &(&a[0] * &a[0]) - &(&a[1] + &a[2]),
        &(&(&(&a[1] * &a[1]) + &(&a[2] * &a[2])) - &(&two * &(&a[0] * &a[3]))) + &(&two * &a[4]),
    ]
}

/// The parameters `α₁..α₅` read off the first column of a member.
pub fn group_params(g: &SymMatrix) -> [SymExpr; 5] {
    [g.get(1, 0).clone(), g.get(2, 0).clone(), g.get(3, 0).clone(), g.get(4, 0).clone(), g.get(5, 0).clone()]
}

pub fn gauge_a(t: &Arc<SymbolTable>) -> SymMatrix {
    group_member(t, &["2*i*pi", "-2*pi^2", "-2*pi^2", "-8*i*pi^3/3", "4*pi^4/3"].map(|s| sym(t, s)))
}

pub fn gauge_b(t: &Arc<SymbolTable>) -> SymMatrix {
    group_member(
        t,
        &["-8*gamma", "32*gamma^2", "32*gamma^2", "(8/3)*(zeta3 - 64*gamma^3)", "(64/3)*(16*gamma^4 - gamma*zeta3)"]
            .map(|s| sym(t, s)),
    )
}

/// The Euler-pairing Gram matrix of the Kapranov collection.
pub fn g_kap(t: &Arc<SymbolTable>) -> SymMatrix {
    ints6(
        t,
        [
            [1, 4, 10, 6, 20, 20],
            [0, 1, 4, 4, 16, 20],
            [0, 0, 1, 0, 4, 10],
            [0, 0, 0, 1, 4, 6],
            [0, 0, 0, 0, 1, 4],
            [0, 0, 0, 0, 0, 1],
        ],
    )
}

pub fn s_kap(t: &Arc<SymbolTable>) -> SymMatrix {
    ints6(
        t,
        [
            [1, -4, 6, 10, -20, 20],
            [0, 1, -4, -4, 16, -20],
            [0, 0, 1, 0, -4, 6],
            [0, 0, 0, 1, -4, 10],
            [0, 0, 0, 0, 1, -4],
            [0, 0, 0, 0, 0, 1],
        ],
    )
}

const KAP2: [&str; 6] = [
    "3/(4*pi^2*c12)",
    "3*(2*gamma + i*pi)/(2*pi^2*c12)",
    "(48*gamma*(gamma + i*pi) - 19*pi^2)/(8*pi^2*c12)",
    "(48*gamma*(gamma + i*pi) + 13*pi^2)/(8*pi^2*c12)",
    "(32*gamma^3 + 48*i*gamma^2*pi - 6*gamma*pi^2 + 5*i*pi^3 - 2*zeta3)/(2*pi^2*c12)",
    "(768*gamma^4 + 1536*i*gamma^3*pi - 288*gamma^2*pi^2 + 480*i*gamma*pi^3 + 7*pi^4 - 96*(2*gamma + i*pi)*zeta3)/(48*pi^2*c12)",
];

const KAP11: [&str; 6] = [
    "1/(4*pi^2*c12)",
    "(2*gamma + i*pi)/(2*pi^2*c12)",
    "(48*gamma*(gamma + i*pi) - 11*pi^2)/(24*pi^2*c12)",
    "(48*gamma*(gamma + i*pi) - 11*pi^2)/(24*pi^2*c12)",
    "((2*gamma + i*pi)*(4*gamma + i*pi)*(4*gamma + 3*i*pi) - 2*zeta3)/(6*pi^2*c12)",
    "(768*gamma^4 + 1536*i*gamma^3*pi - 1056*gamma^2*pi^2 - 288*i*gamma*pi^3 + 23*pi^4 - 96*(2*gamma + i*pi)*zeta3)/(144*pi^2*c12)",
];

const KAP21: [&str; 6] = [
    "1/(2*pi^2*c12)",
    "(4*gamma + 3*i*pi)/(2*pi^2*c12)",
    "(24*gamma*(2*gamma + 3*i*pi) - 29*pi^2)/(12*pi^2*c12)",
    "(24*gamma*(2*gamma + 3*i*pi) - 17*pi^2)/(12*pi^2*c12)",
    "((4*gamma + i*pi)*(4*gamma + 3*i*pi)*(4*gamma + 5*i*pi) - 4*zeta3)/(6*pi^2*c12)",
    "(768*gamma^4 + 2304*i*gamma^3*pi - 2208*gamma^2*pi^2 - 720*i*gamma*pi^3 + 47*pi^4 - 48*(4*gamma + 3*i*pi)*zeta3)/(72*pi^2*c12)",
];

/// The tabulated `C⁻_Kap`, columns in the order `0, 1, 2, (1,1), (2,1), (2,2)`.
pub fn c_kap_minus_reference(t: &Arc<SymbolTable>) -> SymMatrix {
    from_columns(t, &[C5, C1, KAP2, KAP11, KAP21, C6])
}

/// A branch of the Kapranov pipeline: permutation, signs and braid word.
#[derive(Clone, Debug, PartialEq)]
pub struct KapranovBranch {
    pub name: &'static str,
    pub tau: [usize; 6],
    pub signs: [i8; 6],
    pub word: BraidWord,
}

pub fn kapranov_branches() -> [KapranovBranch; 2] {
    [
        KapranovBranch {
            name: "tau1",
            tau: [5, 4, 2, 1, 3, 6],
            signs: [1, -1, -1, 1, -1, 1],
            word: BraidWord::positive(&[1, 5, 4, 2, 3]),
        },
        KapranovBranch {
            name: "tau2",
            tau: [5, 4, 1, 2, 3, 6],
            signs: [1, -1, 1, -1, -1, 1],
            word: BraidWord::positive(&[3, 1, 5, 4, 2, 3]),
        },
    ]
}

/// Permutation and signs taking `S(6)` to the lexicographic Stokes matrix of band `𝓗₀`.
pub const BAND_TAU: [usize; 6] = [5, 4, 2, 1, 3, 6];
pub const BAND_SIGNS: [i8; 6] = [-1, 1, 1, -1, 1, -1];

pub fn omega1() -> BraidWord {
    BraidWord::positive(&[1, 5])
}

pub fn omega2() -> BraidWord {
    BraidWord::positive(&[2, 4, 3, 2, 4])
}

pub fn omega1_hat() -> BraidWord {
    BraidWord::positive(&[1, 3, 5])
}

/// The word passing from band `𝓗_k` to `𝓗_{k+1}`, `k = 0..8`.
pub fn band_step(k: usize) -> BraidWord {
    match k % 4 {
        0 => omega1(),
        2 => omega1_hat(),
        _ => omega2(),
    }
}

pub const BAND_COUNT: usize = 9;

/// The Stokes matrix of band `𝓗_k`, `k = 0..=8`.
pub fn band_s(t: &Arc<SymbolTable>, k: usize) -> SymMatrix {
    assert!(k < BAND_COUNT, "bands are 0 to 8");
    match k {
        0 | 6 | 8 => ints6(
            t,
            [
                [1, 6, -20, 20, -70, 20],
                [0, 1, -4, 4, -16, 6],
                [0, 0, 1, 0, 4, -4],
                [0, 0, 0, 1, -4, 4],
                [0, 0, 0, 0, 1, -6],
                [0, 0, 0, 0, 0, 1],
            ],
        ),
        1 | 3 => ints6(
            t,
            [
                [1, -6, -4, 4, 6, 20],
                [0, 1, 4, -4, -16, -70],
                [0, 0, 1, 0, -4, -20],
                [0, 0, 0, 1, 4, 20],
                [0, 0, 0, 0, 1, 6],
                [0, 0, 0, 0, 0, 1],
            ],
        ),
        2 | 4 => ints6(
            t,
            [
                [1, 6, 20, -20, -70, 20],
                [0, 1, 4, -4, -16, 6],
                [0, 0, 1, 0, -4, 4],
                [0, 0, 0, 1, 4, -4],
                [0, 0, 0, 0, 1, -6],
                [0, 0, 0, 0, 0, 1],
            ],
        ),
        _ => ints6(
            t,
            [
                [1, -6, 4, -4, 6, 20],
                [0, 1, -4, 4, -16, -70],
                [0, 0, 1, 0, 4, 20],
                [0, 0, 0, 1, -4, -20],
                [0, 0, 0, 0, 1, 6],
                [0, 0, 0, 0, 0, 1],
            ],
        ),
    }
}

/// `kπ < Im(t²) + 4φ < (k+1)π`.
pub fn band_label(k: usize) -> String {
    let end = |j: usize| match j {
        0 => "0".to_string(),
        1 => "π".to_string(),
        j => format!("{j}π"),
    };
    format!("{}<Im(t²)+4φ<{}", end(k), end(k + 1))
}

/// The truncated series `S(0, z)` through `z⁴`, written with `q` standing for `z`.
pub fn levelt_series(t: &Arc<SymbolTable>) -> SymMatrix {
    parse6(
        t,
        &[
            ["2*q^4 + 1", "0", "0", "0", "0", "0"],
            ["2*q^3", "1 - 4*q^4", "0", "0", "0", "0"],
            ["q^2", "-q^3", "1", "0", "0", "0"],
            ["q^2", "-q^3", "0", "1", "0", "0"],
            ["q", "0", "-q^3", "-q^3", "4*q^4 + 1", "0"],
            ["q^4", "q", "-q^2", "-q^2", "2*q^3", "1 - 2*q^4"],
        ],
    )
}

/// The displayed conjugate `z^{−μ}(η⁻¹S(0,z)η)z^μ`, again with `q` for `z`.
pub fn levelt_target(t: &Arc<SymbolTable>) -> SymMatrix {
    parse6(
        t,
        &[
            ["1 - 2*q^4", "2*q^4", "-q^4", "-q^4", "q^4", "q^8"],
            ["0", "4*q^4 + 1", "-q^4", "-q^4", "0", "q^4"],
            ["0", "0", "1", "0", "-q^4", "q^4"],
            ["0", "0", "0", "1", "-q^4", "q^4"],
            ["0", "0", "0", "0", "1 - 4*q^4", "2*q^4"],
            ["0", "0", "0", "0", "0", "2*q^4 + 1"],
        ],
    )
}

/// Splits a matrix polynomial in the symbol `q` into its coefficient matrices.
pub fn q_coefficients(m: &SymMatrix, max: usize) -> Result<Vec<SymMatrix>, G24Error> {
    let t = m.table();
    let mut out = vec![SymMatrix::zeros(t, m.n()); max + 1];
    for (i, j, e) in m.entries() {
        for (k, c) in e.coefficients_in("q")? {
            if k < 0 || k as usize > max {
                return Err(G24Error::Invalid(format!("power q^{k} outside 0..={max}")));
            }
            out[k as usize].set(i, j, c);
        }
    }
    Ok(out)
}

pub fn zl_from_q(m: &SymMatrix, max: usize) -> Result<ZLMatrix, G24Error> {
    Ok(ZLMatrix::from_series(m.table(), m.n(), &q_coefficients(m, max)?))
}
