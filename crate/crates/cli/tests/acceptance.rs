use std::sync::Arc;
use std::time::Instant;

use a3::{a3_reference, critical_data, quarter_turn_path, reproduce_a3_table, unpermuted_s, A3Point};
use chambers::{lexicographic_order, track_samples, OrientedLine, PointConfig};
use g24::reference::{
    band_s, g_kap, group_constraints, group_params, table, BAND_SIGNS, BAND_TAU,
};
use g24::*;
use linalg::{cmat, SymMatrix};
use monodromy::{
    apply_braid, apply_gauge, apply_permutation, apply_shift, apply_signs, c0_membership, check_constraints,
    coalescence_vanishing_check, default_coalescence_tol, BraidWord, MonodromyData, Report, Status,
};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use symring::{rat, BigRational, Complex64, GaussianRational, SymExpr, SymbolTable};

const TOL: f64 = 1e-9;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn failures(r: &Report) -> String {
    r.checks.iter().filter(|c| c.status != Status::Pass).map(|c| format!("{}: {}", c.name, c.detail)).collect::<Vec<_>>().join("; ")
}

fn all_pass(r: &Report, what: &str) -> Result<(), String> {
    ensure(r.all_pass(), format!("{what}: {}", failures(r)))
}

fn require(r: &Report, names: &[&str]) -> Result<(), String> {
    for n in names {
        ensure(r.passed(n), format!("check {n} missing or not passing"))?;
    }
    Ok(())
}

fn sym(t: &Arc<SymbolTable>, s: &str) -> SymExpr {
    SymExpr::parse_in(t, s).unwrap()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let g = check_constraints(&g24_reference()).map_err(|e| e.to_string())?;
    all_pass(&g, "G(2,4)")?;
    let a = check_constraints(&a3_reference(0, 1).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    all_pass(&a, "A3")?;
    let t = start.elapsed().as_secs_f64();
    ensure(t < 5.0, format!("took {t:.2} s"))?;
    Ok(format!("{} identities in {t:.2} s", g.checks.len() + a.checks.len()))
}

fn criterion_2() -> Outcome {
    let r = identity_in_v();
    ensure(r.checks.len() == 3, "expected three identities")?;
    all_pass(&r, "identity in v")?;
    let v = solve_v().map_err(|e| e.to_string())?;
    ensure(v == rat(6, 1), format!("v = {v}"))?;
    Ok("v = 6".into())
}

fn criterion_3() -> Outcome {
    let r = verify_resultg24();
    all_pass(&r, "pipeline")?;
    require(
        &r,
        &[
            "tau1_c_is_c_kap_minus",
            "tau1_s_inverse_is_gram",
            "tau1_gauge_b_gives_c_kap_plus",
            "tau2_c_is_c_kap_minus",
            "tau2_s_inverse_is_gram",
            "tau2_gauge_b_gives_c_kap_plus",
            "c_kap_minus_from_classes",
        ],
    )?;
    Ok(format!("{} checks", r.checks.len()))
}

fn criterion_4() -> Outcome {
    let t = table();
    let (td, g) = todd_and_gram(&t);
    ensure(td.integral().is_one(), "Todd class does not integrate to 1")?;
    ensure(g == g_kap(&t), format!("Gram matrix differs: {:?}", g.diff(&g_kap(&t)).first()))?;
    Ok("chi matches the Gram matrix".into())
}

fn criterion_5() -> Outcome {
    let t = table();
    let minus = [
        "1",
        "4*gamma",
        "(48*gamma^2 + pi^2)/6",
        "(48*gamma^2 + pi^2)/6",
        "(4/3)*(16*gamma^3 + gamma*pi^2 - zeta3)",
        "(768*gamma^4 + 96*gamma^2*pi^2 - pi^4 - 192*gamma*zeta3)/36",
    ];
    let plus = [
        "1",
        "-4*gamma",
        "(48*gamma^2 + pi^2)/6",
        "(48*gamma^2 + pi^2)/6",
        "-(4/3)*(16*gamma^3 + gamma*pi^2 - zeta3)",
        "(768*gamma^4 + 96*gamma^2*pi^2 - pi^4 - 192*gamma*zeta3)/36",
    ];
    for (sign, display) in [(GammaSign::Minus, minus), (GammaSign::Plus, plus)] {
        let c = gamma_class(&t, sign);
        for (k, s) in display.iter().enumerate() {
            ensure(c.coeff(k) == &sym(&t, s), format!("gamma{} coefficient {k}: {}", sign.symbol(), c.coeff(k)))?;
        }
    }
    Ok("12 coefficients".into())
}

fn criterion_6() -> Outcome {
    let r = reproduce_a3_table().map_err(|e| e.to_string())?;
    all_pass(&r, "A3 table")?;
    require(&r, &["centre_fixes_s", "centre_multiplies_c_by_m0_inverse", "m0_inverse_is_diag_i_1_minus_i"])?;
    Ok(format!("{} checks", r.checks.len()))
}

fn criterion_7() -> Outcome {
    let r = band_table();
    all_pass(&r, "bands")?;
    let mut names: Vec<String> = (0..9).map(|k| format!("band_{k}_s")).collect();
    names.extend(["full_word_fixes_s", "full_word_multiplies_c_by_m0_inverse", "full_word_acts_as_centre"].map(String::from));
    require(&r, &names.iter().map(String::as_str).collect::<Vec<_>>())?;
    Ok(format!("{} checks", r.checks.len()))
}

fn criterion_8() -> Outcome {
    let u = PointConfig::new(canonical_small(Complex64::new(1.0, 0.0))).map_err(|e| e.to_string())?;
    let line = OrientedLine::new(std::f64::consts::PI / 6.0).map_err(|e| e.to_string())?;
    let order = lexicographic_order(&u, &line).map_err(|e| e.to_string())?.to_string();
    ensure(order == "(5,4,{1,2},3,6)", format!("order {order}"))?;
    let a3 = track_samples(&quarter_turn_path(), &OrientedLine::new(0.0).unwrap()).map_err(|e| e.to_string())?;
    ensure(a3.word.to_string() == "1 2 1", format!("A3 word {}", a3.word))?;
    let g = track_band_crossing(0.2).map_err(|e| e.to_string())?;
    ensure(g.word.to_string() == "1 5", format!("G(2,4) word {}", g.word))?;
    Ok(format!("{order}; 1 2 1; 1 5"))
}

fn criterion_9() -> Outcome {
    let md = g24_reference();
    let u = md.u.clone().ok_or("no canonical coordinates")?;
    ensure((u[0] - u[1]).norm() <= default_coalescence_tol(&u), "u1 != u2")?;
    ensure(md.s.get(0, 1).is_zero() && md.s.get(1, 0).is_zero(), "S12 or S21 nonzero")?;
    ensure(coalescence_vanishing_check(&md.s, &u, default_coalescence_tol(&u)), "G(2,4) check")?;
    let cd = critical_data(&A3Point::maxwell(Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0))).map_err(|e| e.to_string())?;
    let ua = cd.u.to_vec();
    ensure((ua[1] - ua[2]).norm() <= default_coalescence_tol(&ua), "A3 u2 != u3")?;
    let s = unpermuted_s();
    ensure(s.get(1, 2).is_zero() && s.get(2, 1).is_zero(), "A3 S23 or S32 nonzero")?;
    ensure(coalescence_vanishing_check(&s, &ua, default_coalescence_tol(&ua)), "A3 check")?;
    Ok("both datasets".into())
}

fn unipotent_data() -> impl Strategy<Value = MonodromyData> {
    (3usize..=6).prop_flat_map(|n| {
        (prop::collection::vec(-6i64..=6, n * (n - 1) / 2), prop::collection::vec(-3i64..=3, n * n)).prop_map(
            move |(upper, c)| {
                let t = table();
                let mut s = SymMatrix::identity(&t, n);
                let mut it = upper.into_iter();
                for i in 0..n {
                    for j in i + 1..n {
                        s.set(i, j, SymExpr::int(&t, it.next().unwrap()));
                    }
                }
                let c = SymMatrix::from_fn(&t, n, |i, j| SymExpr::int(&t, c[i * n + j]));
                MonodromyData::new(vec![rat(0, 1); n], SymMatrix::zeros(&t, n), SymMatrix::identity(&t, n), s, c, None)
                    .unwrap()
            },
        )
    })
}

fn act(md: &MonodromyData, w: &str) -> MonodromyData {
    apply_braid(md, &w.parse::<BraidWord>().unwrap()).unwrap()
}

fn run<S: Strategy>(cases: u32, s: S, f: impl Fn(S::Value) -> Result<(), TestCaseError>) -> Result<(), String> {
    let mut runner = TestRunner::new(Config { cases, failure_persistence: None, ..Config::default() });
    runner.run(&s, f).map_err(|e| e.to_string())
}

fn braid_relations() -> Result<(), String> {
    run(200, (unipotent_data(), 0usize..100, any::<bool>()), |(md, pick, sign)| {
        let n = md.n();
        let i = 1 + pick % (n - 2);
        let (a, b) = if sign { (i.to_string(), (i + 1).to_string()) } else { (format!("-{i}"), format!("-{}", i + 1)) };
        let lhs = act(&md, &format!("{a} {b} {a}"));
        let rhs = act(&md, &format!("{b} {a} {b}"));
        prop_assert_eq!(&lhs, &rhs);
        if n >= 4 {
            let j = 1 + (i + 1) % (n - 1);
            if j.abs_diff(i) >= 2 {
                prop_assert_eq!(act(&md, &format!("{i} {j}")), act(&md, &format!("{j} {i}")));
            }
        }
        prop_assert_eq!(act(&md, &format!("{i} -{i}")), md);
        Ok(())
    })
}

fn word(raw: Vec<(usize, bool)>, n: usize) -> BraidWord {
    BraidWord::new(raw.into_iter().map(|(i, s)| (1 + (i - 1) % (n - 1), if s { 1 } else { -1 })).collect())
}

fn holds(md: &MonodromyData) -> bool {
    check_constraints(md).map(|r| r.all_pass()).unwrap_or(false)
}

fn member(t: &Arc<SymbolTable>, v: &[(i64, i64, i64)]) -> SymMatrix {
    let g = |(re, im, d): (i64, i64, i64)| SymExpr::constant(t, GaussianRational::new(rat(re, d), rat(im, d)));
    let (a1, a2, a4) = (g(v[0]), g(v[1]), g(v[2]));
    let a3 = &(&a1 * &a1) - &a2;
    let two = SymExpr::int(t, 2);
    let a5 = &(&(&two * &(&a1 * &a4)) - &(&(&a2 * &a2) + &(&a3 * &a3))) * &SymExpr::ratio(t, 1, 2);
    group_member(t, &[a1, a2, a3, a4, a5])
}

fn params() -> impl Strategy<Value = Vec<(i64, i64, i64)>> {
    prop::collection::vec((-9i64..=9, -9i64..=9, 1i64..=4), 3)
}

fn actions_preserve_constraints() -> Result<(), String> {
    let sign_vec = |n| prop::collection::vec(any::<bool>(), n).prop_map(|v| v.iter().map(|&b| if b { 1i8 } else { -1 }).collect::<Vec<_>>());
    run(
        32,
        (0usize..5, 1u8..3, prop::collection::vec((1usize..6, any::<bool>()), 0..6), Just(vec![1usize, 2, 3]).prop_shuffle(), sign_vec(3), -2i64..3),
        |(band, cell, raw, tau, eps, k)| {
            let d = a3_reference(band, cell).unwrap();
            let d = apply_braid(&d, &word(raw, 3)).unwrap();
            prop_assert!(holds(&d));
            let d = apply_shift(&d, k).unwrap();
            prop_assert!(holds(&d));
            let d = apply_permutation(&d, &tau).unwrap();
            prop_assert!(holds(&d));
            let d = apply_signs(&d, &eps).unwrap();
            prop_assert!(holds(&d));
            let d = apply_gauge(&d, &SymMatrix::identity(d.table(), 3)).unwrap();
            prop_assert!(holds(&d));
            Ok(())
        },
    )?;
    run(
        3,
        (prop::collection::vec((1usize..6, any::<bool>()), 0..4), Just(vec![1usize, 2, 3, 4, 5, 6]).prop_shuffle(), sign_vec(6), params()),
        |(raw, tau, eps, p)| {
            let t = table();
            let d = apply_signs(&apply_permutation(&g24_reference(), &BAND_TAU).unwrap(), &BAND_SIGNS).unwrap();
            prop_assert_eq!(&d.s, &band_s(&t, 0));
            let d = apply_braid(&d, &word(raw, 6)).unwrap();
            prop_assert!(holds(&d));
            let d = apply_gauge(&d, &member(&t, &p)).unwrap();
            prop_assert!(holds(&d));
            let d = apply_permutation(&d, &tau).unwrap();
            prop_assert!(holds(&d));
            let d = apply_signs(&d, &eps).unwrap();
            prop_assert!(holds(&d));
            Ok(())
        },
    )
}

fn group_law() -> Result<(), String> {
    run(100, (params(), params()), |(p, q)| {
        let t = table();
        let (g, h) = (member(&t, &p), member(&t, &q));
        let gh = &g * &h;
        prop_assert_eq!(&gh, &(&h * &g));
        prop_assert!(group_constraints(&group_params(&gh)).iter().all(SymExpr::is_zero));
        prop_assert_eq!(group_member(&t, &group_params(&gh)), gh);
        Ok(())
    })
}

fn hirzebruch() -> Result<(), String> {
    let series = prop::collection::vec((-12i64..=12, 1i64..=6), 4)
        .prop_map(|v| v.into_iter().map(|(p, q)| rat(p, q)).collect::<Vec<BigRational>>());
    run(50, series, |f| {
        let md = g24_reference();
        let g = lambda_f(&table(), &f).cup_matrix();
        prop_assert!(c0_membership(&g, &md.mu, &md.r, &md.eta).unwrap());
        Ok(())
    })
}

const SYMS: [&str; 7] = ["pi", "gamma", "zeta3", "s2", "c12", "g14", "g34"];

fn sym_matrix() -> impl Strategy<Value = (SymMatrix, SymMatrix)> {
    let entry = prop::collection::vec((-3i64..=3, -3i64..=3, 0usize..SYMS.len(), -1i32..=2), 0..3).prop_map(|ts| {
        let t = table();
        ts.into_iter().fold(SymExpr::zero(&t), |e, (re, im, s, p)| {
            let c = SymExpr::constant(&t, GaussianRational::new(rat(re, 1), rat(im, 2)));
            &e + &(&c * &SymExpr::symbol(&t, SYMS[s]).unwrap().powi(p).unwrap())
        })
    });
    (2usize..=6).prop_flat_map(move |n| {
        (prop::collection::vec(entry.clone(), n * n), prop::collection::vec(entry.clone(), n * n)).prop_map(move |(a, b)| {
            let t = table();
            let m = |v: Vec<SymExpr>| SymMatrix::from_rows(&t, v.chunks(n).map(|r| r.to_vec()).collect()).unwrap();
            (m(a), m(b))
        })
    })
}

fn relative_gap(sym: &SymMatrix, num: &cmat::CMatrix) -> f64 {
    let s = sym.eval_numeric().unwrap();
    cmat::max_abs_diff(&s, num) / cmat::max_abs(num).max(1.0)
}

fn numeric_oracle() -> Result<(), String> {
    run(100, sym_matrix(), |(a, b)| {
        let (na, nb) = (a.eval_numeric().unwrap(), b.eval_numeric().unwrap());
        prop_assert!(relative_gap(&(&a * &b), &cmat::mul(&na, &nb)) < TOL);
        Ok(())
    })?;
    for md in [g24_reference(), a3_reference(0, 1).unwrap()] {
        let (s, c, eta) = (md.s.eval_numeric().unwrap(), md.c.eval_numeric().unwrap(), md.eta.eval_numeric().unwrap());
        let lhs = cmat::mul(&cmat::mul(&cmat::mul(&c, &s), &cmat::transpose(&c)), &eta);
        let sym = &(&(&md.c * &md.s) * &md.c.transpose()) * &md.eta;
        ensure(relative_gap(&sym, &lhs) < TOL, "pairing product disagrees with the numeric oracle")?;
    }
    Ok(())
}

fn criterion_10() -> Outcome {
    let suites: [(&str, fn() -> Result<(), String>); 5] = [
        ("braid relations", braid_relations),
        ("actions", actions_preserve_constraints),
        ("group law", group_law),
        ("Hirzebruch", hirzebruch),
        ("numeric oracle", numeric_oracle),
    ];
    for (name, f) in suites {
        f().map_err(|e| format!("{name}: {e}"))?;
    }
    Ok("5 suites".into())
}

fn criterion_11() -> Outcome {
    let r = levelt_conjugation_check();
    all_pass(&r, "Levelt")?;
    require(&r, &["no_logarithms", "no_negative_powers", "matches_display"])?;
    Ok(r.get("matches_display").map(|c| c.detail.clone()).unwrap_or_default())
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("constraint suite", criterion_1),
        ("v-determination", criterion_2),
        ("Kapranov pipeline", criterion_3),
        ("Riemann-Roch Gram matrix", criterion_4),
        ("Gamma classes", criterion_5),
        ("A3 table", criterion_6),
        ("G(2,4) band table", criterion_7),
        ("geometry", criterion_8),
        ("coalescence vanishing", criterion_9),
        ("property suites", criterion_10),
        ("Levelt form", criterion_11),
    ];
    let mut failed = Vec::new();
    for (k, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name} ({detail}; {secs:.1} s)", k + 1),
            Err(e) => {
                println!("FAIL {:>2} {name}: {e}", k + 1);
                failed.push(k + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
