//! Skein, r-matrix and collision identities.

use shearq::holonomy::Mode;
use shearq::skein::*;

#[test]
fn classical_skein_holds_symbolically_and_numerically() {
    verify_classical_skein_symbolic().unwrap();
    verify_classical_skein_numeric(42, 10, 1e-12).unwrap();
}

#[test]
fn ptolemy_skein_holds_symbolically_and_numerically() {
    verify_ptolemy_skein_symbolic().unwrap();
    verify_ptolemy_skein_numeric(42, 10, 1e-10).unwrap();
}

#[test]
fn k_trace_factorization_for_two_and_three_factors() {
    verify_fff_factorization().unwrap();
}

#[test]
fn r_matrix_entries_match_the_displays() {
    let basis = shearq::basis::GeneratorBasis::commutative(vec!["S".into()]);
    let rt = r12_tilde(&basis);
    // (2,2) = q^{-1}, (3,3) = q, (2,3) = (3,2) = -1 in 1-based labels
    let q = shearq::text::parse_qlaurent("[1] q^{4/4}", &basis).unwrap();
    let qi = shearq::text::parse_qlaurent("[1] q^{-4/4}", &basis).unwrap();
    let m1 = shearq::text::parse_qlaurent("[-1]", &basis).unwrap();
    assert_eq!(rt.e[1][1], qi);
    assert_eq!(rt.e[2][2], q);
    assert_eq!(rt.e[1][2], m1);
    assert_eq!(rt.e[2][1], m1);
    for i in 0..4 {
        assert!(rt.e[0][i].is_zero());
        assert!(rt.e[3][i].is_zero());
        assert!(rt.e[i][0].is_zero());
        assert!(rt.e[i][3].is_zero());
    }
    verify_srp().unwrap();
}

#[test]
fn intertwiners_hold_in_sandwiched_form() {
    verify_intertwiners().unwrap();
}

#[test]
fn s12_permutes_edge_factors() {
    verify_s12_permutation().unwrap();
}

#[test]
fn reidemeister_two_telescopes_with_the_empty_loop_value() {
    verify_reidemeister_ii().unwrap();
}

#[test]
fn empty_loop_values() {
    let basis = shearq::basis::GeneratorBasis::commutative(vec!["S".into()]);
    let lv_q = loop_value(false, Mode::Quantum, &basis);
    let want = shearq::text::parse_qlaurent("[-1] q^{-4/4} + [-1] q^{4/4}", &basis).unwrap();
    assert_eq!(lv_q, want);
    let lv_c = loop_value(false, Mode::Classical, &basis);
    let want = shearq::text::parse_qlaurent("[-2]", &basis).unwrap();
    assert_eq!(lv_c, want);
    assert!(loop_value(true, Mode::Quantum, &basis).is_zero());
    assert!(loop_value(true, Mode::Classical, &basis).is_zero());
}

#[test]
fn collision_limit_scales_quadratically() {
    collision_target_symbolic().unwrap();
    collision_limit_check(42).unwrap();
}

#[test]
fn products_of_positive_blocks_keep_the_sign_structure() {
    verify_sign_structure(42, 40).unwrap();
}
