//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line
//! and asserting both correctness and the time budget.

use cliffdeg::selftest::{run_criterion, DEFAULT_SEED};

fn check(id: u8) {
    let r = run_criterion(id, DEFAULT_SEED).expect("known criterion");
    println!("{r}");
    for note in &r.notes {
        println!("      note: {note}");
    }
    assert!(r.correct, "criterion {id} failed: {}", r.detail);
    assert!(r.within_budget(), "criterion {id} exceeded its time budget: {:?} > {:?}", r.elapsed, r.budget);
}

#[test]
fn criterion_01_form_reconstruction() {
    check(1);
}

#[test]
fn criterion_02_structure_constant_oracle() {
    check(2);
}

#[test]
fn criterion_03_matrix_identification() {
    check(3);
}

#[test]
fn criterion_04_even_to_odd_restriction() {
    check(4);
}

#[test]
fn criterion_05_lipschitz_axioms() {
    check(5);
}

#[test]
fn criterion_06_degeneration() {
    check(6);
}

#[test]
fn criterion_07_plethysm_g2() {
    check(7);
}

#[test]
fn criterion_08_plethysm_f4_c3() {
    check(8);
}

#[test]
fn criterion_09_local_models() {
    check(9);
}

#[test]
fn criterion_10_weyl_dimension() {
    check(10);
}
