use g24::*;
use monodromy::{Report, Status};

fn assert_all_pass(r: &Report) {
    let bad: Vec<String> =
        r.checks.iter().filter(|c| c.status != Status::Pass).map(|c| format!("{}: {}", c.name, c.detail)).collect();
    assert!(bad.is_empty(), "failing checks:\n{}", bad.join("\n"));
}

#[test]
fn psi_diagonalizes() {
    assert_all_pass(&psi_check_g24());
}

#[test]
fn identities_hold_for_every_v() {
    let r = identity_in_v();
    assert_eq!(r.checks.len(), 3);
    assert_all_pass(&r);
}

#[test]
fn v_is_six() {
    assert_eq!(solve_v().unwrap(), symring::rat(6, 1));
}

#[test]
fn g24_verify_passes() {
    assert_all_pass(&verify_g24());
}

#[test]
fn kapranov_pipeline() {
    assert_all_pass(&verify_resultg24());
}

#[test]
fn bands() {
    assert_all_pass(&band_table());
}

#[test]
fn levelt() {
    assert_all_pass(&levelt_conjugation_check());
}
