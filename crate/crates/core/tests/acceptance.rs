//! One line per acceptance criterion, each held to its time budget.

use polar_words::verify;

fn check(id: u8) {
    let outcome = verify::run(id);
    println!("{outcome}");
    assert!(outcome.passed, "{outcome}");
}

#[test]
fn criterion_1_g_sequence() {
    check(1);
}

#[test]
fn criterion_2_language_counts() {
    check(2);
}

#[test]
fn criterion_3_case_tables() {
    check(3);
}

#[test]
fn criterion_4_family_counts() {
    check(4);
}

#[test]
fn criterion_5_stratification() {
    check(5);
}

#[test]
fn criterion_6_polar_space() {
    check(6);
}

#[test]
fn criterion_7_strata_facts() {
    check(7);
}

#[test]
fn criterion_8_bijection() {
    check(8);
}

#[test]
fn criterion_9_quotient_certificate() {
    check(9);
}
