use a3::*;
use chambers::{lexicographic_order, stokes_rays, track_samples, OrientedLine, PointConfig};
use linalg::cmat::{max_abs_diff, CMatrix};
use symring::Complex64;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

#[test]
fn critical_values_match_the_series() {
    let t2 = c(1e-3, 0.0);
    let cd = critical_data(&A3Point::maxwell(c(1.0, 0.0), t2)).unwrap();
    let ser = series::u_series(t2, c(1.0, 0.0));
    for k in 0..3 {
        assert!((cd.u[k] - ser[k]).norm() < 1e-9, "u{}: {} vs {}", k + 1, cd.u[k], ser[k]);
    }
    let u2 = -0.25 + c(0.0, 1.0) * t2 / 2f64.sqrt() + t2 * t2 / 8.0;
    assert!((cd.u[1] - u2).norm() < 1e-9);
}

fn align_rows(a: &CMatrix, b: &CMatrix) -> CMatrix {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| {
            let plus: f64 = ra.iter().zip(rb).map(|(x, y)| (x - y).norm()).sum();
            let minus: f64 = ra.iter().zip(rb).map(|(x, y)| (x + y).norm()).sum();
            if plus <= minus {
                ra.clone()
            } else {
                ra.iter().map(|x| -x).collect()
            }
        })
        .collect()
}

#[test]
fn psi_matches_the_series_up_to_row_signs() {
    for t2 in [1e-2, 3e-3] {
        let t2 = c(t2, 0.0);
        let psi = psi_matrix_a3(&A3Point::maxwell(c(1.0, 0.0), t2)).unwrap();
        let ser = series::psi_series(t2, c(1.0, 0.0));
        let aligned = align_rows(&psi, &ser);
        assert!(max_abs_diff(&aligned, &ser) < 10.0 * t2.norm().powi(4));
    }
}

#[test]
fn psi_leading_order_at_t2_zero() {
    let psi = psi_matrix_a3(&A3Point::maxwell(c(1.0, 0.0), c(0.0, 0.0))).unwrap();
    let ser = series::psi_series(c(0.0, 0.0), c(1.0, 0.0));
    assert!(max_abs_diff(&align_rows(&psi, &ser), &ser) < 1e-12);
}

#[test]
fn lexicographic_order_of_the_base_cell() {
    let u = split_point(c(1.0, 0.0), 1e-3, std::f64::consts::PI - 0.2);
    let o = lexicographic_order(&u, &OrientedLine::new(1e-3).unwrap()).unwrap();
    assert_eq!(o.flatten(), LEX_PERMUTATION.to_vec());
    let exact = exact_split_point(c(1.0, 0.0), 1e-3, std::f64::consts::PI - 0.2).unwrap();
    let o = lexicographic_order(&exact, &OrientedLine::new(1e-3).unwrap()).unwrap();
    assert_eq!(o.flatten(), LEX_PERMUTATION.to_vec());
}

#[test]
fn quarter_turn_gives_121() {
    let line = OrientedLine::new(0.0).unwrap();
    let r = track_samples(&quarter_turn_path(), &line).unwrap();
    assert_eq!(r.word.to_string(), "1 2 1");
    assert_eq!(r.word, table_word(1, 1).unwrap());
}

#[test]
fn quarter_turn_on_exact_critical_values() {
    let line = OrientedLine::new(0.0).unwrap();
    let path: Vec<PointConfig> = chambers::uniform_grid(801)
        .into_iter()
        .map(|s| exact_split_point(Complex64::from_polar(1.0, std::f64::consts::FRAC_PI_2 * s), 1e-3, std::f64::consts::PI - 0.2).unwrap())
        .collect();
    assert_eq!(track_samples(&path, &line).unwrap().word.to_string(), "1 2 1");
}

#[test]
fn three_quarter_turn_reaches_band_three() {
    let line = OrientedLine::new(0.0).unwrap();
    let path = rotation_path(c(1.0, 0.0), 1.5 * std::f64::consts::PI, 1e-3, std::f64::consts::PI - 0.2, 6001);
    let w = track_samples(&path, &line).unwrap().word;
    let reached = monodromy::apply_braid(&a3_reference(0, 1).unwrap(), &w).unwrap();
    assert_eq!(reached.s, s_lex(3));
    assert!(reached.c == c_lex(3, 1).unwrap() || reached.c == c_lex(3, 2).unwrap(), "{w}");
}

#[test]
fn real_line_inadmissible_on_the_diagonal() {
    let u = PointConfig::new(vec![c(0.0, 0.0), c(0.0, -0.5), c(0.0, -0.5)]).unwrap();
    assert!(!chambers::is_admissible(&u, &OrientedLine::new(0.0).unwrap(), 1e-9));
    assert_eq!(stokes_rays(&u).len(), 4);
}
