//! The self-check suite: every identity the engine is supposed to
//! reproduce, runnable as one batch with a pass/fail line per section.
//!
//! Sections with many independent instances (ring laws, round trips,
//! random integrals, Euler instances) go through [`run_batch`], which is
//! data-parallel under the `parallel` feature and sequential otherwise.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::expvalue::ExpValue;
use crate::gross::GrossNumber;
use crate::integrals::{integrate, GrossPolynomial};
use crate::poly::PolyN;
use crate::powersum::{faulhaber, geom_closed, state};
use crate::rational::ExactRational;
use crate::series::{
    rearrangement_count, sum_alternating_linear, sum_arithmetic, sum_geometric, sum_pattern,
    GeomStart, PatternSum,
};
use crate::sinpoly::coeff_mismatch;
use crate::textio::{eval_str, format_record, parse_machine, to_machine_json};
use crate::zetaeta::{
    euler_factor_partial, euler_inequality_check, eta, first_primes, relation_check, zeta,
    ZetaQuery,
};

/// Outcome of one suite section.
#[derive(Clone, Debug)]
pub struct CheckLine {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckLine {
    fn from_failures(name: &str, total: usize, failures: Vec<String>) -> CheckLine {
        match failures.first() {
            None => CheckLine {
                name: name.to_string(),
                passed: true,
                detail: format!("{total} exact checks"),
            },
            Some(first) => CheckLine {
                name: name.to_string(),
                passed: false,
                detail: format!("{} of {total} failed; first: {first}", failures.len()),
            },
        }
    }
}

/// Full suite outcome.
#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub lines: Vec<CheckLine>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.lines.iter().all(|l| l.passed)
    }

    pub fn render_table(&self) -> String {
        let mut out = String::new();
        for line in &self.lines {
            let verdict = if line.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!("{verdict}  {:<28} {}\n", line.name, line.detail));
        }
        out.push_str(if self.all_passed() {
            "all sections passed\n"
        } else {
            "FAILURES PRESENT\n"
        });
        out
    }
}

/// Apply `check` to every item, collecting failure descriptions.
/// Data-parallel when the `parallel` feature is on.
#[cfg(feature = "parallel")]
pub fn run_batch<T, F>(items: &[T], check: F) -> Vec<String>
where
    T: Sync,
    F: Fn(&T) -> Option<String> + Sync + Send,
{
    use rayon::prelude::*;
    items.par_iter().filter_map(check).collect()
}

/// Apply `check` to every item, collecting failure descriptions.
#[cfg(not(feature = "parallel"))]
pub fn run_batch<T, F>(items: &[T], check: F) -> Vec<String>
where
    T: Sync,
    F: Fn(&T) -> Option<String> + Sync + Send,
{
    run_batch_seq(items, check)
}

/// Always-sequential variant, kept callable for benchmarking against the
/// parallel path.
pub fn run_batch_seq<T, F>(items: &[T], check: F) -> Vec<String>
where
    T: Sync,
    F: Fn(&T) -> Option<String> + Sync + Send,
{
    items.iter().filter_map(check).collect()
}

fn rat(n: i64, d: i64) -> ExactRational {
    ExactRational::ratio(n, d)
}

fn g() -> GrossNumber {
    GrossNumber::grossone()
}

fn expect_eq<T: PartialEq + std::fmt::Debug>(
    failures: &mut Vec<String>,
    name: &str,
    got: T,
    want: T,
) {
    if got != want {
        failures.push(format!("{name}: got {got:?}, want {want:?}"));
    }
}

/// Random positional record with small powers and digits.
pub fn random_gross(rng: &mut ChaCha8Rng) -> GrossNumber {
    let terms = rng.gen_range(0..=4);
    GrossNumber::from_terms((0..terms).map(|_| {
        (
            BigInt::from(rng.gen_range(-6..=6i64)),
            rat(rng.gen_range(-99..=99), rng.gen_range(1..=20)),
        )
    }))
}

/// Random value that may carry exponential terms, for round trips.
pub fn random_value(rng: &mut ChaCha8Rng) -> ExpValue {
    let mut value = ExpValue::from_gross(random_gross(rng));
    let bases = [(2, 1), (3, 1), (5, 1), (10, 1), (3, 2), (7, 3)];
    for _ in 0..rng.gen_range(0..=2) {
        let (bn, bd) = bases[rng.gen_range(0..bases.len())];
        let mut exponent = GrossNumber::monomial(
            rng.gen_range(1..=2i64),
            ExactRational::from_integer(rng.gen_range(-3..=3i64)),
        );
        if exponent.is_zero() {
            exponent = g();
        }
        exponent += GrossNumber::from_integer(rng.gen_range(-2..=2i64));
        let coeff = rat(rng.gen_range(-9..=9), rng.gen_range(1..=6));
        value = value.add(
            &ExpValue::exponential(coeff, rat(bn, bd), exponent).expect("supported term shape"),
        );
    }
    value
}

fn expect_record(
    failures: &mut Vec<String>,
    total: &mut usize,
    name: &str,
    got: GrossNumber,
    want_text: &str,
) {
    *total += 1;
    let want = eval_str(want_text)
        .expect("expected-value expression parses")
        .into_gross()
        .expect("expected value is a record");
    if got != want {
        failures.push(format!("{name}: got {got:?}, want {want:?}"));
    }
}

/// Fixed series identities with explicit infinite counts.
pub fn check_series_values() -> CheckLine {
    let mut failures = Vec::new();
    let mut total = 0;

    let one = GrossNumber::one();
    expect_record(
        &mut failures,
        &mut total,
        "sum of naturals up to G",
        sum_arithmetic(&one, &one, &g()).unwrap(),
        "0.5G^2 + 0.5G",
    );
    let inv = GrossNumber::monomial(-1, rat(1, 1));
    expect_record(
        &mut failures,
        &mut total,
        "sum of i/G up to G",
        sum_arithmetic(&inv, &inv, &g()).unwrap(),
        "0.5G + 0.5",
    );
    let s1 = |k: &GrossNumber| sum_arithmetic(&GrossNumber::from_integer(7), &GrossNumber::zero(), k);
    let s2 = |n: &GrossNumber| sum_arithmetic(&GrossNumber::from_integer(3), &GrossNumber::zero(), n);
    expect_record(
        &mut failures,
        &mut total,
        "constant sums: 3G - 35G",
        &s2(&g()).unwrap() - &s1(&g().scale(&rat(5, 1))).unwrap(),
        "-32G",
    );
    let seven_g_two = eval_str("7G+2").unwrap().into_gross().unwrap();
    expect_record(
        &mut failures,
        &mut total,
        "constant sums: (21G+6) - 21G",
        &s2(&seven_g_two).unwrap() - &s1(&g().scale(&rat(3, 1))).unwrap(),
        "6",
    );
    let half_g = g().scale(&rat(1, 2));
    expect_record(
        &mut failures,
        &mut total,
        "infinite items 2G over G/2 items",
        sum_arithmetic(&g().scale(&rat(2, 1)), &GrossNumber::zero(), &half_g).unwrap(),
        "G^2",
    );
    expect_record(
        &mut failures,
        &mut total,
        "infinitesimal items 4/G over G/2 items",
        sum_arithmetic(&inv.scale(&rat(4, 1)), &GrossNumber::zero(), &half_g).unwrap(),
        "2",
    );

    let alternating = |count: GrossNumber| {
        sum_pattern(&PatternSum::new(vec![rat(1, 1), rat(-1, 1)], count).unwrap())
    };
    expect_record(
        &mut failures,
        &mut total,
        "alternating units over G items",
        alternating(g()),
        "0",
    );
    let two_g_one = eval_str("2G+1").unwrap().into_gross().unwrap();
    expect_record(
        &mut failures,
        &mut total,
        "alternating units over 2G+1 items",
        alternating(two_g_one),
        "1",
    );
    let two_plus_minus = PatternSum::new(vec![rat(1, 1), rat(1, 1), rat(-1, 1)], g()).unwrap();
    expect_record(
        &mut failures,
        &mut total,
        "two-plus-one-minus over G items",
        sum_pattern(&two_plus_minus),
        "G/3",
    );
    total += 1;
    let (pos, neg) = rearrangement_count(&two_plus_minus);
    if pos != eval_str("2G/3").unwrap().into_gross().unwrap()
        || neg != eval_str("G/3").unwrap().into_gross().unwrap()
    {
        failures.push(format!("rearrangement counts: got ({pos:?}, {neg:?})"));
    }

    expect_record(
        &mut failures,
        &mut total,
        "alternating linear over G",
        sum_alternating_linear(&g()).unwrap(),
        "-G/2",
    );
    expect_record(
        &mut failures,
        &mut total,
        "alternating linear over G-1",
        sum_alternating_linear(&eval_str("G-1").unwrap().into_gross().unwrap()).unwrap(),
        "G/2",
    );
    expect_record(
        &mut failures,
        &mut total,
        "alternating linear over G+1",
        sum_alternating_linear(&eval_str("G+1").unwrap().into_gross().unwrap()).unwrap(),
        "G/2 + 1",
    );
    expect_record(
        &mut failures,
        &mut total,
        "alternating linear over G^2",
        sum_alternating_linear(&g().pow(2)).unwrap(),
        "-G^2/2",
    );

    total += 2;
    let geometric3 = sum_geometric(&rat(3, 1), &g().pow(2), GeomStart::FromZero).unwrap();
    let want3 = eval_str("0.5*3^(G^2+1) - 0.5").unwrap();
    if geometric3 != want3 {
        failures.push("geometric ratio 3 over G^2+1 items".to_string());
    }
    let halves = sum_geometric(&rat(1, 2), &g(), GeomStart::FromOne).unwrap();
    let want_halves = eval_str("1 - 2^-G").unwrap();
    if halves != want_halves {
        failures.push("geometric halves over G items".to_string());
    }

    CheckLine::from_failures("series closed-form values", total, failures)
}

/// Partial zeta/eta values at explicit counts. The alternating-cubes
/// entry asserts the closed form the recurrence, the brute-force oracle
/// and the relation identity all agree on.
pub fn check_zeta_eta_table() -> CheckLine {
    let mut failures = Vec::new();
    let half_g = g().scale(&rat(1, 2));
    let cases: Vec<(&str, i64, GrossNumber, &str)> = vec![
        ("zeta(0, G/2)", 0, half_g.clone(), "G/2"),
        ("zeta(0, G)", 0, g(), "G"),
        ("zeta(-1, G/2)", -1, half_g, "(G/2+1)G/4"),
        ("zeta(-1, G)", -1, g(), "(G+1)G/2"),
    ];
    let mut total = 0;
    for (name, s, n, want) in cases {
        total += 1;
        let got = zeta(&ZetaQuery::new(s, n).unwrap());
        let want = eval_str(want).unwrap().into_gross().unwrap();
        expect_eq(&mut failures, name, got, want);
    }
    let eta_cases: Vec<(&str, i64, GrossNumber, &str)> = vec![
        ("eta(0, G)", 0, g(), "0"),
        ("eta(0, G^2-1)", 0, eval_str("G^2-1").unwrap().into_gross().unwrap(), "1"),
        ("eta(-1, G)", -1, g(), "-G/2"),
        ("eta(-2, G)", -2, g(), "-0.5G(G+1)"),
        ("eta(-3, G)", -3, g(), "-0.25G^2*(2G+3)"),
        ("eta(-4, G)", -4, g(), "-0.5G(G+1)(G^2+G-1)"),
    ];
    for (name, s, n, want) in eta_cases {
        total += 1;
        let got = eta(&ZetaQuery::new(s, n).unwrap()).unwrap();
        let want = eval_str(want).unwrap().into_gross().unwrap();
        expect_eq(&mut failures, name, got, want);
    }
    CheckLine::from_failures("zeta/eta table", total, failures)
}

/// The perturbation route and the Bernoulli route give identical
/// polynomials, and both match direct accumulation for every finite
/// count up to 200.
pub fn check_method_equivalence() -> CheckLine {
    let mut failures = Vec::new();
    let mut total = 0;

    total += 2;
    let order0 = geom_closed().standard_part_at_one();
    match order0 {
        Ok(p) if p == PolyN::n_plus(1) => {}
        other => failures.push(format!("order-0 standard part: {other:?}")),
    }
    if faulhaber(0) != PolyN::n() {
        failures.push("order-0 closed form".to_string());
    }

    for m in 1..=8usize {
        total += 1;
        let perturbation = match state(m).standard_part_at_one() {
            Ok(p) => p,
            Err(e) => {
                failures.push(format!("order {m}: standard part failed: {e}"));
                continue;
            }
        };
        let closed = faulhaber(m);
        if perturbation != closed {
            failures.push(format!("order {m}: {perturbation:?} != {closed:?}"));
        }
    }

    let polys: Vec<PolyN> = (0..=8).map(faulhaber).collect();
    let counts: Vec<u64> = (1..=200).collect();
    let brute_failures = run_batch(&counts, |&n| {
        let mut acc = vec![ExactRational::zero(); 9];
        for i in 1..=n {
            let mut power = ExactRational::one();
            let base = ExactRational::from_integer(i);
            for slot in acc.iter_mut() {
                *slot += &power;
                power *= &base;
            }
        }
        for (m, poly) in polys.iter().enumerate() {
            if poly.eval_rational(&ExactRational::from_integer(n)) != acc[m] {
                return Some(format!("order {m} at n = {n}"));
            }
        }
        None
    });
    total += counts.len();
    failures.extend(brute_failures);

    CheckLine::from_failures("power-sum method equivalence", total, failures)
}

/// eta(s, n) = zeta(s, n) - 2^(1-s) zeta(s, k) over both parities, for
/// s = 0..-8 and finite plus infinite counts.
pub fn check_relation_suite() -> CheckLine {
    let mut failures = Vec::new();
    let mut counts: Vec<GrossNumber> = vec![
        g(),
        g().pow(2),
        eval_str("6G+2").unwrap().into_gross().unwrap(),
        eval_str("6G+3").unwrap().into_gross().unwrap(),
    ];
    counts.extend((2..=100).map(GrossNumber::from_integer));
    let instances: Vec<(i64, GrossNumber)> = (0..=8)
        .flat_map(|m| counts.iter().cloned().map(move |n| (-m, n)))
        .collect();
    let total = instances.len();
    let failures_batch = run_batch(&instances, |(s, n)| {
        match relation_check(*s, n) {
            Ok(true) => None,
            Ok(false) => Some(format!("relation fails at s = {s}, n = {n:?}")),
            Err(e) => Some(format!("relation errored at s = {s}, n = {n:?}: {e}")),
        }
    });
    failures.extend(failures_batch);
    CheckLine::from_failures("zeta/eta relation suite", total, failures)
}

/// The displayed endpoint-explicit integrals, exactly.
pub fn check_integral_displays() -> CheckLine {
    let mut failures = Vec::new();
    let x2 = GrossPolynomial::x_power(2);
    let zero = GrossNumber::zero();
    let upper_eps = eval_str("G + G^-2").unwrap().into_gross().unwrap();
    let mut total = 0;
    let mut expect = |name: &str, got: GrossNumber, want: &str| {
        total += 1;
        let want = eval_str(want).unwrap().into_gross().unwrap();
        if got != want {
            failures.push(format!("{name}: got {got:?}, want {want:?}"));
        }
    };
    expect("x^2 over [0, G]", integrate(&x2, &zero, &g()), "G^3/3");
    expect("x^2 over [0, G^2]", integrate(&x2, &zero, &g().pow(2)), "G^6/3");
    expect(
        "x^2 over [G, G^2]",
        integrate(&x2, &g(), &g().pow(2)),
        "G^6/3 - G^3/3",
    );
    expect(
        "x^2 over [G, G+G^-2]",
        integrate(&x2, &g(), &upper_eps),
        "1 + G^-3 + G^-6/3",
    );
    let x2_minus_x = GrossPolynomial::new(vec![
        GrossNumber::zero(),
        -GrossNumber::one(),
        GrossNumber::one(),
    ]);
    expect(
        "x^2 - x over [G, G+G^-2]",
        integrate(&x2_minus_x, &g(), &upper_eps),
        "1 - G^-1 + G^-3 - 0.5G^-4 + G^-6/3",
    );
    expect(
        "G x^2 over [G, G^2]",
        integrate(&x2.scale(&g()), &g(), &g().pow(2)),
        "G^7/3 - G^4/3",
    );
    expect(
        "G^-4 x^2 over [G, G^2]",
        integrate(&x2.scale(&GrossNumber::monomial(-4, rat(1, 1))), &g(), &g().pow(2)),
        "G^2/3 - G^-1/3",
    );
    CheckLine::from_failures("integral displays", total, failures)
}

/// Additivity, orientation, zero width and scalar linearity on random
/// polynomials and endpoints.
pub fn check_integral_properties(seed: u64, instances: usize) -> CheckLine {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x1a2b);
    let items: Vec<(GrossPolynomial, GrossNumber, GrossNumber, GrossNumber)> = (0..instances)
        .map(|_| {
            let degree = rng.gen_range(0..=3);
            let poly = GrossPolynomial::new(
                (0..=degree).map(|_| random_gross(&mut rng)).collect(),
            );
            (
                poly,
                random_gross(&mut rng),
                random_gross(&mut rng),
                random_gross(&mut rng),
            )
        })
        .collect();
    let failures = run_batch(&items, |(p, a, b, c)| {
        let ab = integrate(p, a, b);
        let bc = integrate(p, b, c);
        let ac = integrate(p, a, c);
        if (&ab + &bc) != ac {
            return Some(format!("additivity fails for {p:?} on [{a:?}, {b:?}, {c:?}]"));
        }
        if integrate(p, b, a) != -&ab {
            return Some(format!("orientation fails for {p:?}"));
        }
        if !integrate(p, a, a).is_zero() {
            return Some(format!("zero width fails for {p:?}"));
        }
        let scale = &(c * c) + &GrossNumber::one();
        if integrate(&p.scale(&scale), a, b) != &scale * &ab {
            return Some(format!("scalar linearity fails for {p:?}"));
        }
        None
    });
    CheckLine::from_failures("integral properties", items.len(), failures)
}

/// Desk-scale sum-versus-product comparisons plus the per-factor
/// truncation identity and the structural infinite-count statement.
pub fn check_euler(seed: u64, instances: usize) -> CheckLine {
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x3c4d);
    let items: Vec<(u32, u64, Vec<u32>)> = (0..instances)
        .map(|_| {
            let s = rng.gen_range(2..=4);
            let n = rng.gen_range(3..=500);
            let r = rng.gen_range(1..=6);
            let depths = (0..r).map(|_| rng.gen_range(1..=20)).collect();
            (s, n, depths)
        })
        .collect();
    let mut total = items.len();
    failures.extend(run_batch(&items, |(s, n, depths)| {
        match euler_inequality_check(*s, *n, depths) {
            Ok(true) => None,
            Ok(false) => Some(format!("equal at s = {s}, n = {n}, depths = {depths:?}")),
            Err(e) => Some(format!("errored at s = {s}, n = {n}: {e}")),
        }
    }));

    // Truncated factor identity against direct accumulation.
    for p in first_primes(6) {
        for s in [2i64, 3, 4] {
            for k in 1..=20u32 {
                total += 1;
                let closed = euler_factor_partial(p, s, &GrossNumber::from_integer(k as i64))
                    .unwrap()
                    .as_rational()
                    .unwrap();
                let mut acc = ExactRational::zero();
                let ratio = ExactRational::from_integer(p)
                    .pow_checked(&BigInt::from(-s))
                    .unwrap();
                for i in 0..k {
                    acc += ratio.pow_checked(&BigInt::from(i)).unwrap();
                }
                if closed != acc {
                    failures.push(format!("factor identity fails at p = {p}, s = {s}, k = {k}"));
                }
            }
        }
    }

    // Infinite truncation always keeps an exponential tail, so it cannot
    // equal the untruncated rational factor.
    for p in first_primes(6) {
        for s in [1i64, 2, 3] {
            total += 1;
            let truncated = euler_factor_partial(p, s, &g()).unwrap();
            let untruncated = (ExactRational::one()
                - ExactRational::from_integer(p)
                    .pow_checked(&BigInt::from(-s))
                    .unwrap())
            .recip()
            .unwrap();
            if truncated.exp_terms().is_empty()
                || truncated == ExpValue::from_rational(untruncated)
            {
                failures.push(format!("no tail at p = {p}, s = {s}"));
            }
        }
    }

    CheckLine::from_failures("euler product inequality", total, failures)
}

/// Coefficient mismatches between the Taylor and product polynomials for
/// orders 1..=12.
pub fn check_sinpoly() -> CheckLine {
    let mut failures = Vec::new();
    let mut total = 0;
    for k in 1..=12u32 {
        total += 1;
        match coeff_mismatch(k) {
            Err(e) => failures.push(format!("k = {k}: {e}")),
            Ok(report) => {
                if report.is_empty() {
                    failures.push(format!("k = {k}: empty report"));
                }
                if !report.entries.iter().any(|e| e.degree == 3) {
                    failures.push(format!("k = {k}: no degree-3 mismatch"));
                }
                if report.top_degree.ratio_minus_one_lower_bound.signum() <= 0 {
                    failures.push(format!("k = {k}: top-degree bound not positive"));
                }
                if report.top_degree.numeric_gap.partial_cmp(&0.0)
                    != Some(std::cmp::Ordering::Greater)
                {
                    failures.push(format!("k = {k}: zero numeric gap"));
                }
            }
        }
    }
    CheckLine::from_failures("sin polynomial mismatches", total, failures)
}

/// The ordering chain G/2 < G < 2G+1 < 2^G < 10^G.
pub fn check_ordering_chain() -> CheckLine {
    let mut failures = Vec::new();
    let chain: Vec<ExpValue> = vec![
        eval_str("G/2").unwrap(),
        eval_str("G").unwrap(),
        eval_str("2G+1").unwrap(),
        eval_str("2^G").unwrap(),
        eval_str("10^G").unwrap(),
    ];
    let total = chain.len() - 1;
    for pair in chain.windows(2) {
        if pair[0].compare(&pair[1]) != Some(std::cmp::Ordering::Less) {
            failures.push(format!(
                "expected {} < {}",
                format_record(&pair[0]),
                format_record(&pair[1])
            ));
        }
    }
    CheckLine::from_failures("ordering chain", total, failures)
}

/// Print/parse round trips through both formats on random values.
pub fn check_round_trip(seed: u64, instances: usize) -> CheckLine {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5e6f);
    let items: Vec<ExpValue> = (0..instances).map(|_| random_value(&mut rng)).collect();
    let failures = run_batch(&items, |value| {
        let record = format_record(value);
        match eval_str(&record) {
            Ok(back) if &back == value => {}
            Ok(back) => {
                return Some(format!(
                    "record `{record}` reparsed to {} instead",
                    format_record(&back)
                ))
            }
            Err(e) => return Some(format!("record `{record}` failed to parse: {e}")),
        }
        let machine = to_machine_json(value);
        match parse_machine(&machine) {
            Ok(back) if &back == value => None,
            Ok(_) => Some(format!("machine `{machine}` reparsed to a different value")),
            Err(e) => Some(format!("machine `{machine}` failed to parse: {e}")),
        }
    });
    CheckLine::from_failures("print/parse round trips", items.len(), failures)
}

/// Closed series forms versus direct accumulation for every finite count
/// up to the limit.
pub fn check_series_oracles(limit: u64) -> CheckLine {
    let counts: Vec<u64> = (1..=limit).collect();
    let failures = run_batch(&counts, |&n| {
        let count = GrossNumber::from_integer(n);
        let a1 = rat(3, 2);
        let d = rat(-2, 7);
        let closed = sum_arithmetic(
            &GrossNumber::from_rational(a1.clone()),
            &GrossNumber::from_rational(d.clone()),
            &count,
        )
        .unwrap()
        .as_rational()
        .unwrap();
        let mut acc = ExactRational::zero();
        let mut item = a1;
        for _ in 0..n {
            acc += &item;
            item += &d;
        }
        if closed != acc {
            return Some(format!("arithmetic closed form at n = {n}"));
        }

        for x in [rat(3, 2), rat(-2, 3)] {
            let closed = sum_geometric(&x, &count, GeomStart::FromZero)
                .unwrap()
                .as_rational()
                .unwrap();
            let mut acc = ExactRational::zero();
            let mut power = ExactRational::one();
            for _ in 0..=n {
                acc += &power;
                power *= &x;
            }
            if closed != acc {
                return Some(format!("geometric closed form at n = {n}, x = {x:?}"));
            }
        }

        let pattern = vec![rat(1, 1), rat(1, 1), rat(-1, 1)];
        let ps = PatternSum::new(pattern.clone(), count).unwrap();
        let closed = sum_pattern(&ps).as_rational().unwrap();
        let mut acc = ExactRational::zero();
        for i in 0..n {
            acc += &pattern[(i % 3) as usize];
        }
        if closed != acc {
            return Some(format!("pattern closed form at n = {n}"));
        }
        None
    });
    CheckLine::from_failures("series accumulation oracles", counts.len(), failures)
}

/// Ring laws, order consistency and exact-division round trips on random
/// record triples.
pub fn check_ring_laws(seed: u64, instances: usize) -> CheckLine {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x7a8b);
    let items: Vec<(GrossNumber, GrossNumber, GrossNumber)> = (0..instances)
        .map(|_| {
            (
                random_gross(&mut rng),
                random_gross(&mut rng),
                random_gross(&mut rng),
            )
        })
        .collect();
    let failures = run_batch(&items, |(a, b, c)| {
        if (&(a + b) + c) != (a + &(b + c)) {
            return Some(format!("additive associativity: {a:?}, {b:?}, {c:?}"));
        }
        if (a + b) != (b + a) {
            return Some(format!("additive commutativity: {a:?}, {b:?}"));
        }
        if (&(a * b) * c) != (a * &(b * c)) {
            return Some(format!("multiplicative associativity: {a:?}, {b:?}, {c:?}"));
        }
        if (a * b) != (b * a) {
            return Some(format!("multiplicative commutativity: {a:?}, {b:?}"));
        }
        if (a * &(b + c)) != (&(a * b) + &(a * c)) {
            return Some(format!("distributivity: {a:?}, {b:?}, {c:?}"));
        }
        if &(a + &GrossNumber::zero()) != a || &(a * &GrossNumber::one()) != a {
            return Some(format!("identities: {a:?}"));
        }
        if a < b {
            if (a + c) >= (b + c) {
                return Some(format!("order vs addition: {a:?}, {b:?}, {c:?}"));
            }
            let positive = &(c * c) + &GrossNumber::one();
            if (a * &positive) >= (b * &positive) {
                return Some(format!("order vs positive multiplication: {a:?}, {b:?}"));
            }
        }
        if !b.is_zero() {
            match (a * b).div_exact(b) {
                Ok(q) if &q == a => {}
                other => return Some(format!("division round trip: {a:?}, {b:?}: {other:?}")),
            }
        }
        None
    });
    CheckLine::from_failures("record ring laws", items.len(), failures)
}

/// The whole reproduction suite. Deterministic for a fixed seed.
pub fn run_suite(seed: u64) -> SuiteReport {
    SuiteReport {
        lines: vec![
            check_series_values(),
            check_zeta_eta_table(),
            check_method_equivalence(),
            check_relation_suite(),
            check_integral_displays(),
            check_integral_properties(seed, 1000),
            check_euler(seed, 200),
            check_sinpoly(),
            check_ordering_chain(),
            check_round_trip(seed, 10_000),
            check_series_oracles(500),
            check_ring_laws(seed, 10_000),
        ],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fast_sections_pass() {
        for line in [
            check_series_values(),
            check_zeta_eta_table(),
            check_integral_displays(),
            check_sinpoly(),
            check_ordering_chain(),
        ] {
            assert!(line.passed, "{}: {}", line.name, line.detail);
        }
    }

    #[test]
    fn randomized_sections_pass_small() {
        for line in [
            check_integral_properties(7, 40),
            check_euler(7, 8),
            check_round_trip(7, 200),
            check_ring_laws(7, 300),
        ] {
            assert!(line.passed, "{}: {}", line.name, line.detail);
        }
    }

    #[test]
    fn batch_runners_agree() {
        let items: Vec<u64> = (0..100).collect();
        let check = |n: &u64| (n % 7 == 3).then(|| format!("hit {n:03}"));
        let mut seq = run_batch_seq(&items, check);
        let mut any = run_batch(&items, check);
        seq.sort();
        any.sort();
        assert_eq!(seq, any);
        assert_eq!(seq.len(), 14);
    }

    #[test]
    fn table_rendering() {
        let report = SuiteReport {
            lines: vec![CheckLine {
                name: "demo".into(),
                passed: true,
                detail: "1 exact checks".into(),
            }],
        };
        let table = report.render_table();
        assert!(table.contains("PASS"));
        assert!(table.contains("demo"));
        assert!(report.all_passed());
    }
}
