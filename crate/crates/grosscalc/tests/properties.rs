//! Property tests for the algebraic laws the engine promises: ring axioms
//! on records, order consistency, partition and parity laws, value/text
//! round trips, and the closed-form-versus-accumulation identities.

use std::cmp::Ordering;

use num_bigint::BigInt;
use proptest::prelude::*;

use grosscalc::expvalue::{pow_rational_gross, ExpValue};
use grosscalc::gross::{GrossNumber, Parity};
use grosscalc::integrals::{integrate, GrossPolynomial};
use grosscalc::rational::ExactRational;
use grosscalc::series::{sum_geometric, GeomStart};
use grosscalc::textio::{eval_str, format_record, parse_machine, to_machine_json};

fn rational() -> impl Strategy<Value = ExactRational> {
    (-200i64..=200, 1i64..=40).prop_map(|(n, d)| ExactRational::ratio(n, d))
}

fn gross() -> impl Strategy<Value = GrossNumber> {
    prop::collection::vec(((-5i64..=5), rational()), 0..=4).prop_map(|terms| {
        GrossNumber::from_terms(terms.into_iter().map(|(p, d)| (BigInt::from(p), d)))
    })
}

/// Integer-valued records: no negative grosspowers, integer finite digit.
fn integer_count() -> impl Strategy<Value = GrossNumber> {
    (
        prop::collection::vec(((1i64..=4), rational()), 0..=3),
        -50i64..=50,
    )
        .prop_map(|(high, c0)| {
            let mut n = GrossNumber::from_terms(
                high.into_iter().map(|(p, d)| (BigInt::from(p), d)),
            );
            n += GrossNumber::from_integer(c0);
            n
        })
}

fn value() -> impl Strategy<Value = ExpValue> {
    (
        gross(),
        prop::collection::vec(
            (
                (-9i64..=9, 1i64..=6),
                prop::sample::select(vec![(2i64, 1i64), (3, 1), (5, 1), (10, 1), (3, 2)]),
                1i64..=2,
                -3i64..=3,
                -2i64..=2,
            ),
            0..=2,
        ),
    )
        .prop_map(|(gross, terms)| {
            let mut value = ExpValue::from_gross(gross);
            for ((cn, cd), (bn, bd), power, digit, shift) in terms {
                let mut exponent =
                    GrossNumber::monomial(power, ExactRational::from_integer(digit));
                if exponent.is_zero() {
                    exponent = GrossNumber::grossone();
                }
                exponent += GrossNumber::from_integer(shift);
                value = value.add(
                    &ExpValue::exponential(
                        ExactRational::ratio(cn, cd),
                        ExactRational::ratio(bn, bd),
                        exponent,
                    )
                    .expect("supported term shape"),
                );
            }
            value
        })
}

proptest! {
    #[test]
    fn ring_laws(a in gross(), b in gross(), c in gross()) {
        prop_assert_eq!(&(&(&a + &b) + &c), &(&a + &(&b + &c)));
        prop_assert_eq!(&(&a + &b), &(&b + &a));
        prop_assert_eq!(&(&(&a * &b) * &c), &(&a * &(&b * &c)));
        prop_assert_eq!(&(&a * &b), &(&b * &a));
        prop_assert_eq!(&(&a * &(&b + &c)), &(&(&a * &b) + &(&a * &c)));
        prop_assert_eq!(&(&a + &GrossNumber::zero()), &a);
        prop_assert_eq!(&(&a * &GrossNumber::one()), &a);
        prop_assert_eq!(&(&a - &a), &GrossNumber::zero());
    }

    #[test]
    fn order_is_total_and_compatible(a in gross(), b in gross(), c in gross()) {
        match a.cmp(&b) {
            Ordering::Less => {
                prop_assert!(&a + &c < &b + &c);
                let positive = &(&c * &c) + &GrossNumber::one();
                prop_assert!(&a * &positive < &b * &positive);
            }
            Ordering::Equal => prop_assert_eq!(&a, &b),
            Ordering::Greater => prop_assert!(&b - &a < GrossNumber::zero()),
        }
    }

    #[test]
    fn exact_division_inverts_multiplication(a in gross(), b in gross()) {
        if !b.is_zero() {
            prop_assert_eq!((&a * &b).div_exact(&b).unwrap(), a);
        }
    }

    #[test]
    fn parts_partition_by_band(a in gross()) {
        let (infinite, finite, infinitesimal) = a.parts();
        prop_assert_eq!(&(&(&infinite + &finite) + &infinitesimal), &a);
        for (p, _) in infinite.terms() {
            prop_assert!(p > &BigInt::from(0));
        }
        for (p, _) in finite.terms() {
            prop_assert_eq!(p, &BigInt::from(0));
        }
        for (p, _) in infinitesimal.terms() {
            prop_assert!(p < &BigInt::from(0));
        }
    }

    #[test]
    fn parity_is_additive(a in integer_count(), b in integer_count()) {
        let pa = a.parity().unwrap();
        let pb = b.parity().unwrap();
        let expected = if pa == pb { Parity::Even } else { Parity::Odd };
        prop_assert_eq!((&a + &b).parity().unwrap(), expected);
    }

    #[test]
    fn infinite_exponentials_dominate_records(g in gross(), power in 1i64..=3) {
        // 2^E with a positive leading grosspower exceeds every record.
        let exponent = GrossNumber::monomial(power, ExactRational::one());
        let term = ExpValue::exponential(
            ExactRational::one(),
            ExactRational::from_integer(2),
            exponent,
        ).unwrap();
        prop_assert_eq!(term.compare(&ExpValue::from_gross(g)), Some(Ordering::Greater));
    }

    #[test]
    fn value_addition_laws(a in value(), b in value(), c in value()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.add(&ExpValue::zero()), a);
    }

    #[test]
    fn value_multiplication_commutes_where_defined(a in value(), b in value()) {
        match (a.mul(&b), b.mul(&a)) {
            (Ok(left), Ok(right)) => prop_assert_eq!(left, right),
            (Err(left), Err(right)) => prop_assert_eq!(left, right),
            (left, right) => prop_assert!(false, "asymmetric: {:?} vs {:?}", left, right),
        }
    }

    #[test]
    fn round_trips(v in value()) {
        let record = format_record(&v);
        let reparsed = eval_str(&record).expect("record output reparses");
        prop_assert_eq!(&reparsed, &v, "record text: {}", record);
        let machine = to_machine_json(&v);
        prop_assert_eq!(&parse_machine(&machine).unwrap(), &v, "machine text: {}", machine);
    }

    #[test]
    fn geometric_recurrence(xn in -6i64..=6, xd in 1i64..=4, n in 0i64..=25) {
        let x = ExactRational::ratio(xn, xd);
        if !x.is_one() {
            let count = GrossNumber::from_integer(n);
            let next = GrossNumber::from_integer(n + 1);
            let larger = sum_geometric(&x, &next, GeomStart::FromZero).unwrap();
            let smaller = sum_geometric(&x, &count, GeomStart::FromZero).unwrap();
            let item = pow_rational_gross(&x, &next).unwrap();
            prop_assert_eq!(larger.sub(&smaller), item);
        }
    }

    #[test]
    fn integral_interval_laws(
        coeffs in prop::collection::vec(gross(), 1..=4),
        a in gross(),
        b in gross(),
        c in gross(),
    ) {
        let p = GrossPolynomial::new(coeffs);
        let ab = integrate(&p, &a, &b);
        let bc = integrate(&p, &b, &c);
        prop_assert_eq!(&(&ab + &bc), &integrate(&p, &a, &c));
        prop_assert_eq!(integrate(&p, &b, &a), -&ab);
        prop_assert_eq!(integrate(&p, &a, &a), GrossNumber::zero());
    }

    #[test]
    fn decimal_literals_parse_exactly(n in 0i64..=999, places in 1u32..=4) {
        let denom = 10i64.pow(places);
        let text = format!("{}.{:0width$}", n / denom, n % denom, width = places as usize);
        let parsed = eval_str(&text).unwrap().as_rational().unwrap();
        prop_assert_eq!(parsed, ExactRational::ratio(n, denom));
    }
}
