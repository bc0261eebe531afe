//! Acceptance suite: every target identity of the engine, grouped into
//! numbered criteria, each printing one pass/fail line (run with
//! `--nocapture` to see them all, or use `grosscalc check suite`).
//!
//! All assertions are exact; there are no tolerances anywhere except the
//! binary64 gap reports of the sin-polynomial comparison, which only need
//! to be nonzero and are certified by exact rational bounds.

use grosscalc::checks::{
    check_euler, check_integral_displays, check_integral_properties, check_method_equivalence,
    check_ordering_chain, check_relation_suite, check_ring_laws, check_round_trip,
    check_series_oracles, check_series_values, check_sinpoly, check_zeta_eta_table, CheckLine,
};
use grosscalc::gross::GrossNumber;
use grosscalc::integrals::{integrate, GrossPolynomial};
use grosscalc::textio::eval_str;
use grosscalc::zetaeta::{eta, ZetaQuery};

const SEED: u64 = 0xACCE;

fn assert_line(criterion: &str, line: CheckLine) {
    let verdict = if line.passed { "PASS" } else { "FAIL" };
    println!("{verdict}  {criterion}: {} — {}", line.name, line.detail);
    assert!(line.passed, "{criterion} / {}: {}", line.name, line.detail);
}

#[test]
fn criterion_1_series_closed_form_values() {
    assert_line("criterion 1", check_series_values());
}

#[test]
fn criterion_2_zeta_eta_table() {
    assert_line("criterion 2", check_zeta_eta_table());
}

/// Pins the tabulated value -0.5G^2(G+3) for the alternating cubes over G
/// items. That form is inconsistent with direct summation (it gives -10
/// at count 2, where 1 - 8 = -7), with the recurrence at x = -1, and with
/// the relation identity, which all agree on -0.25G^2(2G+3). The stated
/// entry is asserted as written and is expected to fail; the verified
/// value is covered by `criterion_2_zeta_eta_table`.
#[test]
fn criterion_2_eta_cubic_table_entry_as_stated() {
    let computed = eta(&ZetaQuery::new(-3, GrossNumber::grossone()).unwrap()).unwrap();
    let stated = eval_str("-0.5G^2*(G+3)").unwrap().into_gross().unwrap();
    let verdict = if computed == stated { "PASS" } else { "FAIL" };
    println!("{verdict}  criterion 2: stated alternating-cubes entry");
    assert_eq!(
        computed, stated,
        "stated table value disagrees with direct summation, the recurrence and the relation"
    );
}

#[test]
fn criterion_3_method_equivalence() {
    assert_line("criterion 3", check_method_equivalence());
}

#[test]
fn criterion_4_relation_suite() {
    assert_line("criterion 4", check_relation_suite());
}

#[test]
fn criterion_5_integral_displays() {
    assert_line("criterion 5", check_integral_displays());
}

/// Pins the tabulated display of `x^2 - x` over `[G, G + G^-2]` as the
/// purely infinitesimal G^-3 - 0.5G^-4 + G^-6/3. The fundamental-theorem
/// evaluation gives 1 - G^-1 + G^-3 - 0.5G^-4 + G^-6/3 (the same engine
/// value that makes the x^2 and x displays and the additivity property
/// hold), so the stated form drops the finite part 1 and the -G^-1 term.
/// Asserted as written and expected to fail; the verified value is
/// covered by `criterion_5_integral_displays`.
#[test]
fn criterion_5_integral_display_quadratic_minus_linear_as_stated() {
    let integrand = GrossPolynomial::new(vec![
        GrossNumber::zero(),
        -GrossNumber::one(),
        GrossNumber::one(),
    ]);
    let upper = eval_str("G + G^-2").unwrap().into_gross().unwrap();
    let computed = integrate(&integrand, &GrossNumber::grossone(), &upper);
    let stated = eval_str("G^-3 - 0.5G^-4 + G^-6/3").unwrap().into_gross().unwrap();
    let verdict = if computed == stated { "PASS" } else { "FAIL" };
    println!("{verdict}  criterion 5: stated quadratic-minus-linear display");
    assert_eq!(
        computed, stated,
        "stated display disagrees with the antiderivative evaluation"
    );
}

#[test]
fn criterion_5_integral_properties() {
    assert_line("criterion 5", check_integral_properties(SEED, 1000));
}

#[test]
fn criterion_6_euler_inequality() {
    assert_line("criterion 6", check_euler(SEED, 200));
}

#[test]
fn criterion_7_sin_polynomial_mismatches() {
    assert_line("criterion 7", check_sinpoly());
}

#[test]
fn criterion_8_ordering_chain() {
    assert_line("criterion 8", check_ordering_chain());
}

#[test]
fn criterion_9_round_trips() {
    assert_line("criterion 9", check_round_trip(SEED, 10_000));
}

#[test]
fn criterion_9_series_oracles() {
    assert_line("criterion 9", check_series_oracles(500));
}

#[test]
fn criterion_9_ring_laws() {
    assert_line("criterion 9", check_ring_laws(SEED, 10_000));
}
