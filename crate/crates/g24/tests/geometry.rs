use chambers::{lexicographic_order, OrientedLine, PointConfig};
use g24::reference::{c_kap_minus_reference, gauge_a, kapranov_branches, table};
use g24::*;
use monodromy::{apply_braid, apply_gauge, apply_permutation, apply_signs};
use symring::Complex64;

#[test]
fn lexicographic_order_at_the_origin() {
    let u = PointConfig::new(canonical_small(Complex64::new(1.0, 0.0))).unwrap();
    let line = OrientedLine::new(std::f64::consts::PI / 6.0).unwrap();
    assert_eq!(lexicographic_order(&u, &line).unwrap().to_string(), "(5,4,{1,2},3,6)");
}

#[test]
fn band_crossing_is_omega1() {
    for alpha in [0.2, 1.1, 2.5, -0.7] {
        let r = track_band_crossing(alpha).unwrap();
        assert_eq!(r.word.to_string(), "1 5", "alpha = {alpha}");
    }
}

#[test]
fn band_crossing_starts_in_band_zero_order() {
    let r = track_band_crossing(0.2).unwrap();
    let groups = &r.initial_order;
    assert_eq!(groups[0], 5);
    assert_eq!(groups[5], 6);
}

#[test]
fn inverse_braid_orientation_misses_the_kapranov_matrix() {
    let t = table();
    for b in kapranov_branches() {
        let md = apply_permutation(&g24_reference(), &b.tau).unwrap();
        let md = apply_gauge(&apply_signs(&md, &b.signs).unwrap(), &gauge_a(&t)).unwrap();
        let direct = apply_braid(&md, &b.word).unwrap();
        assert_eq!(direct.c, c_kap_minus_reference(&t));
        let inverse = apply_braid(&md, &b.word.inverse()).unwrap();
        assert_ne!(inverse.c, c_kap_minus_reference(&t));
    }
}

#[test]
fn band_rows_carry_cumulative_words() {
    let rows = band_rows().unwrap();
    assert_eq!(rows.len(), 9);
    assert_eq!(rows[1].word.to_string(), "1 5");
    assert_eq!(rows[8].word.len(), 30);
    assert_eq!(rows[1].label, "π<Im(t²)+4φ<2π");
}

#[test]
fn split_pair_crossing_adds_its_own_letter() {
    assert_eq!(track_band_crossing(1.0).unwrap().word.to_string(), "3 1 5");
}
