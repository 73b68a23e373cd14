use a3::*;
use linalg::SymMatrix;
use monodromy::{apply_braid, apply_gauge, apply_permutation, apply_shift, apply_signs, check_constraints, BraidWord};
use proptest::prelude::*;

fn letters() -> impl Strategy<Value = Vec<(usize, i8)>> {
    prop::collection::vec((1usize..3, prop::bool::ANY), 0..7)
        .prop_map(|v| v.into_iter().map(|(i, s)| (i, if s { 1 } else { -1 })).collect())
}

fn permutation() -> impl Strategy<Value = Vec<usize>> {
    Just(vec![1usize, 2, 3]).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn actions_preserve_the_constraints(
        band in 0usize..5,
        cell in 1u8..3,
        word in letters(),
        tau in permutation(),
        eps in prop::collection::vec(prop::bool::ANY, 3),
        k in -3i64..4,
    ) {
        let d = a3_reference(band, cell).unwrap();
        let d = apply_braid(&d, &BraidWord::new(word)).unwrap();
        prop_assert!(check_constraints(&d).unwrap().all_pass());
        let d = apply_shift(&d, k).unwrap();
        prop_assert!(check_constraints(&d).unwrap().all_pass());
        let d = apply_permutation(&d, &tau).unwrap();
        prop_assert!(check_constraints(&d).unwrap().all_pass());
        let signs: Vec<i8> = eps.iter().map(|&b| if b { 1 } else { -1 }).collect();
        let d = apply_signs(&d, &signs).unwrap();
        prop_assert!(check_constraints(&d).unwrap().all_pass());
        let d = apply_gauge(&d, &SymMatrix::identity(d.table(), 3)).unwrap();
        prop_assert!(check_constraints(&d).unwrap().all_pass());
    }
}

#[test]
fn nontrivial_gauges_are_refused() {
    let d = a3_reference(0, 1).unwrap();
    let t = d.table().clone();
    let g = SymMatrix::from_ints(&t, &[&[1, 0, 0], &[0, 1, 0], &[1, 0, 1]]).unwrap();
    assert!(apply_gauge(&d, &g).is_err());
    let g = SymMatrix::from_ints(&t, &[&[-1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).unwrap();
    assert!(apply_gauge(&d, &g).is_err());
}
