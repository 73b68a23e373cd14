use std::sync::Arc;

use g24::reference::{band_s, group_constraints, group_params, table, BAND_SIGNS, BAND_TAU};
use g24::*;
use linalg::SymMatrix;
use monodromy::{
    apply_braid, apply_gauge, apply_permutation, apply_signs, c0_membership, check_constraints, BraidWord,
};
use proptest::prelude::*;
use symring::{rat, BigRational, GaussianRational, SymExpr, SymbolTable};

fn gaussian(t: &Arc<SymbolTable>, re: i64, im: i64, den: i64) -> SymExpr {
    SymExpr::constant(t, GaussianRational::new(rat(re, den), rat(im, den)))
}

/// Free parameters `α₁, α₂, α₄`; `α₃` and `α₅` are solved from the two equations.
fn member() -> impl Strategy<Value = SymMatrix> {
    prop::collection::vec((-9i64..=9, -9i64..=9, 1i64..=4), 3).prop_map(|v| {
        let t = table();
        let a1 = gaussian(&t, v[0].0, v[0].1, v[0].2);
        let a2 = gaussian(&t, v[1].0, v[1].1, v[1].2);
        let a4 = gaussian(&t, v[2].0, v[2].1, v[2].2);
        let a3 = &(&a1 * &a1) - &a2;
        let two = SymExpr::int(&t, 2);
        let a5 = &(&(&two * &(&a1 * &a4)) - &(&(&a2 * &a2) + &(&a3 * &a3))) * &SymExpr::ratio(&t, 1, 2);
        group_member(&t, &[a1, a2, a3, a4, a5])
    })
}

fn series() -> impl Strategy<Value = Vec<BigRational>> {
    prop::collection::vec((-12i64..=12, 1i64..=6), 4).prop_map(|v| v.into_iter().map(|(p, q)| rat(p, q)).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn group_is_closed_and_commutative(g in member(), h in member()) {
        let gh = &g * &h;
        prop_assert_eq!(&gh, &(&h * &g));
        prop_assert!(group_constraints(&group_params(&gh)).iter().all(SymExpr::is_zero));
        prop_assert_eq!(group_member(&table(), &group_params(&gh)), gh);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn hirzebruch_twists_lie_in_c0(f in series()) {
        let md = g24_reference();
        let g = lambda_f(&table(), &f).cup_matrix();
        prop_assert!(c0_membership(&g, &md.mu, &md.r, &md.eta).unwrap());
        prop_assert!(group_constraints(&group_params(&g)).iter().all(SymExpr::is_zero));
    }

    #[test]
    fn group_members_lie_in_c0(g in member()) {
        let md = g24_reference();
        prop_assert!(c0_membership(&g, &md.mu, &md.r, &md.eta).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn actions_preserve_the_constraints(
        raw in prop::collection::vec((1usize..6, prop::bool::ANY), 0..5),
        tau in Just(vec![1usize, 2, 3, 4, 5, 6]).prop_shuffle(),
        eps in prop::collection::vec(prop::bool::ANY, 6),
        g in member(),
    ) {
        let start = apply_signs(&apply_permutation(&g24_reference(), &BAND_TAU).unwrap(), &BAND_SIGNS).unwrap();
        prop_assert_eq!(&start.s, &band_s(&table(), 0));
        let w = BraidWord::new(raw.into_iter().map(|(i, s)| (i, if s { 1 } else { -1 })).collect());
        let d = apply_braid(&start, &w).unwrap();
        prop_assert!(check_constraints(&d).unwrap().all_pass());
        let d = apply_gauge(&d, &g).unwrap();
        prop_assert!(check_constraints(&d).unwrap().all_pass());
        let d = apply_permutation(&d, &tau).unwrap();
        prop_assert!(check_constraints(&d).unwrap().all_pass());
        let signs: Vec<i8> = eps.iter().map(|&b| if b { 1 } else { -1 }).collect();
        let d = apply_signs(&d, &signs).unwrap();
        prop_assert!(check_constraints(&d).unwrap().all_pass());
    }
}

#[test]
fn group_identity_and_inverse() {
    let t = table();
    let zero = SymExpr::zero(&t);
    let id = group_member(&t, &[zero.clone(), zero.clone(), zero.clone(), zero.clone(), zero]);
    assert!(id.is_identity());
}
