//! Closed-form evaluation of sums with an explicitly fixed item count,
//! finite or infinite. The count is always a concrete record; there is no
//! limit semantics anywhere.

use num_bigint::BigInt;
use num_integer::Integer;

use crate::error::{GrossError, Result};
use crate::expvalue::{pow_rational_gross, ExpValue};
use crate::gross::GrossNumber;
use crate::powersum::alternating_power_sum;
use crate::rational::ExactRational;

/// Which index the geometric sum starts from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeomStart {
    FromZero,
    FromOne,
}

fn require_count(n: &GrossNumber, at_least: i64) -> Result<()> {
    if !n.is_integer_valued() {
        return Err(GrossError::NotIntegerValued);
    }
    if n < &GrossNumber::from_integer(at_least) {
        return Err(GrossError::InvalidCount);
    }
    Ok(())
}

/// Sum of `n` items of the arithmetic progression starting at `a1` with
/// common difference `d`: `(n/2)(2*a1 + (n-1)d)`, exact for finite and
/// infinite counts alike.
pub fn sum_arithmetic(a1: &GrossNumber, d: &GrossNumber, n: &GrossNumber) -> Result<GrossNumber> {
    require_count(n, 1)?;
    let twice_first = a1.scale(&ExactRational::from_integer(2));
    let span = &(n - &GrossNumber::one()) * d;
    Ok((&(&twice_first + &span) * n).scale(&ExactRational::ratio(1, 2)))
}

/// Geometric sum with ratio `x` over an explicit count: `sum_{i=from}^{n} x^i`.
/// For `x != 1` the value is `(1 - x^(n+1))/(1 - x)` minus the skipped
/// item; the tail `x^(n+1)` stays in the result as an exact exponential
/// term when `n` is infinite.
pub fn sum_geometric(x: &ExactRational, n: &GrossNumber, start: GeomStart) -> Result<ExpValue> {
    let from = match start {
        GeomStart::FromZero => 0,
        GeomStart::FromOne => 1,
    };
    require_count(n, from)?;
    if x.is_one() {
        let items = n - &GrossNumber::from_integer(from - 1);
        return Ok(ExpValue::from_gross(items));
    }
    if x.is_negative() && n.parity().is_err() {
        return Err(GrossError::ParityRequired);
    }
    let tail = pow_rational_gross(x, &(n + &GrossNumber::one()))?;
    let scale = (ExactRational::one() - x).recip()?;
    let mut sum = ExpValue::from_rational(scale.clone()).sub(&tail.scale(&scale));
    if from == 1 {
        sum = sum.sub(&ExpValue::one());
    }
    Ok(sum)
}

/// A repeating pattern of rational items summed over an explicit count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternSum {
    pattern: Vec<ExactRational>,
    count: GrossNumber,
}

impl PatternSum {
    pub fn new(pattern: Vec<ExactRational>, count: GrossNumber) -> Result<Self> {
        if pattern.is_empty() {
            return Err(GrossError::InvalidCount);
        }
        require_count(&count, 0)?;
        Ok(PatternSum { pattern, count })
    }

    pub fn pattern(&self) -> &[ExactRational] {
        &self.pattern
    }

    pub fn count(&self) -> &GrossNumber {
        &self.count
    }

    /// Completed cycles `q` and leftover item count `r`: `count = q*L + r`
    /// with `0 <= r < L`. The leftover is decided by the finite digit
    /// alone since the infinite unit is divisible by every finite natural.
    fn split_cycles(&self) -> (GrossNumber, usize) {
        let length = BigInt::from(self.pattern.len());
        let c0 = self
            .count
            .finite_digit()
            .to_integer()
            .expect("validated integer count");
        let leftover = c0.mod_floor(&length);
        let cycles = (&self.count - &GrossNumber::from_integer(leftover.clone()))
            .div_rational(&ExactRational::from_integer(length))
            .expect("pattern length is nonzero");
        let leftover = usize::try_from(leftover).expect("0 <= r < L <= usize::MAX");
        (cycles, leftover)
    }
}

/// Exact sum of the repeating pattern over its count.
pub fn sum_pattern(ps: &PatternSum) -> GrossNumber {
    let (cycles, leftover) = ps.split_cycles();
    let cycle_total = ps
        .pattern
        .iter()
        .fold(ExactRational::zero(), |acc, item| acc + item);
    let partial = ps.pattern[..leftover]
        .iter()
        .fold(ExactRational::zero(), |acc, item| acc + item);
    &cycles.scale(&cycle_total) + &GrossNumber::from_rational(partial)
}

/// Counts of positive and negative items implied by the pattern and the
/// total count; zero items belong to neither side.
pub fn rearrangement_count(ps: &PatternSum) -> (GrossNumber, GrossNumber) {
    let (cycles, leftover) = ps.split_cycles();
    let count_signs = |items: &[ExactRational]| -> (i64, i64) {
        let mut pos = 0;
        let mut neg = 0;
        for item in items {
            match item.signum() {
                s if s > 0 => pos += 1,
                s if s < 0 => neg += 1,
                _ => {}
            }
        }
        (pos, neg)
    };
    let (cycle_pos, cycle_neg) = count_signs(&ps.pattern);
    let (part_pos, part_neg) = count_signs(&ps.pattern[..leftover]);
    let positives = &cycles.scale(&ExactRational::from_integer(cycle_pos))
        + &GrossNumber::from_integer(part_pos);
    let negatives = &cycles.scale(&ExactRational::from_integer(cycle_neg))
        + &GrossNumber::from_integer(part_neg);
    (positives, negatives)
}

/// The alternating linear sum `1 - 2 + 3 - 4 + ...` over `n` items,
/// delegated to the power-sum recurrence at `x = -1`.
pub fn sum_alternating_linear(n: &GrossNumber) -> Result<GrossNumber> {
    require_count(n, 0)?;
    alternating_power_sum(1, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expvalue::ExpValue;

    fn g() -> GrossNumber {
        GrossNumber::grossone()
    }

    fn rat(n: i64, d: i64) -> ExactRational {
        ExactRational::ratio(n, d)
    }

    fn gn(pairs: &[(i64, (i64, i64))]) -> GrossNumber {
        GrossNumber::from_terms(
            pairs
                .iter()
                .map(|(p, (n, d))| (BigInt::from(*p), rat(*n, *d))),
        )
    }

    #[test]
    fn arithmetic_examples() {
        // 1 + 2 + ... + G = 0.5G^2 + 0.5G.
        let natural = sum_arithmetic(&GrossNumber::one(), &GrossNumber::one(), &g()).unwrap();
        assert_eq!(natural, gn(&[(2, (1, 2)), (1, (1, 2))]));

        // Items G times smaller: 0.5G + 0.5.
        let inv = GrossNumber::monomial(-1, rat(1, 1));
        let scaled = sum_arithmetic(&inv, &inv, &g()).unwrap();
        assert_eq!(scaled, gn(&[(1, (1, 2)), (0, (1, 2))]));

        // Constant sevens over 5G items: 35G.
        let five_g = g().scale(&rat(5, 1));
        let sevens = sum_arithmetic(
            &GrossNumber::from_integer(7),
            &GrossNumber::zero(),
            &five_g,
        )
        .unwrap();
        assert_eq!(sevens, gn(&[(1, (35, 1))]));

        assert_eq!(
            sum_arithmetic(&GrossNumber::one(), &GrossNumber::one(), &GrossNumber::zero()),
            Err(GrossError::InvalidCount)
        );
        assert_eq!(
            sum_arithmetic(&GrossNumber::one(), &GrossNumber::one(), &inv),
            Err(GrossError::NotIntegerValued)
        );
    }

    #[test]
    fn arithmetic_matches_accumulation() {
        for n in 1..=60i64 {
            let closed = sum_arithmetic(
                &GrossNumber::from_rational(rat(3, 2)),
                &GrossNumber::from_rational(rat(-2, 7)),
                &GrossNumber::from_integer(n),
            )
            .unwrap()
            .as_rational()
            .unwrap();
            let mut acc = ExactRational::zero();
            for i in 0..n {
                acc += rat(3, 2) + rat(-2, 7) * ExactRational::from_integer(i);
            }
            assert_eq!(closed, acc, "n = {n}");
        }
    }

    #[test]
    fn geometric_examples() {
        // sum_{i=0}^{G^2} 3^i = 0.5*3^(G^2+1) - 0.5.
        let g2 = g().pow(2);
        let value = sum_geometric(&rat(3, 1), &g2, GeomStart::FromZero).unwrap();
        let expected = ExpValue::exponential(rat(1, 2), rat(3, 1), &g2 + &GrossNumber::one())
            .unwrap()
            .add(&ExpValue::from_rational(rat(-1, 2)));
        assert_eq!(value, expected);

        // sum_{i=1}^{G} 2^(-i) = 1 - 2^(-G).
        let halves = sum_geometric(&rat(1, 2), &g(), GeomStart::FromOne).unwrap();
        let expected = ExpValue::one()
            .add(&ExpValue::exponential(rat(-1, 1), rat(2, 1), -g()).unwrap());
        assert_eq!(halves, expected);

        // x = 1 degenerates to the item count.
        assert_eq!(
            sum_geometric(&rat(1, 1), &GrossNumber::zero(), GeomStart::FromZero).unwrap(),
            ExpValue::one()
        );
        assert_eq!(
            sum_geometric(&rat(1, 1), &g(), GeomStart::FromZero).unwrap(),
            ExpValue::from_gross(&g() + &GrossNumber::one())
        );
    }

    #[test]
    fn geometric_newly_added_item() {
        // Q(G^2 + 1) - Q(G^2) = 3^(G^2+1).
        let g2 = g().pow(2);
        let g2p1 = &g2 + &GrossNumber::one();
        let larger = sum_geometric(&rat(3, 1), &g2p1, GeomStart::FromZero).unwrap();
        let smaller = sum_geometric(&rat(3, 1), &g2, GeomStart::FromZero).unwrap();
        let item = ExpValue::exponential(rat(1, 1), rat(3, 1), g2p1).unwrap();
        assert_eq!(larger.sub(&smaller), item);
    }

    #[test]
    fn geometric_matches_accumulation() {
        for x in [rat(3, 1), rat(1, 2), rat(-2, 3), rat(1, 1), rat(-1, 1)] {
            for n in 0..=30u32 {
                let count = GrossNumber::from_integer(n as i64);
                let closed = sum_geometric(&x, &count, GeomStart::FromZero)
                    .unwrap()
                    .as_rational()
                    .unwrap();
                let mut acc = ExactRational::zero();
                for i in 0..=n {
                    acc += x.pow_checked(&BigInt::from(i)).unwrap();
                }
                assert_eq!(closed, acc, "x = {x:?}, n = {n}");
            }
        }
    }

    #[test]
    fn pattern_examples() {
        // S5: 1 - 1 + 1 - ... over G items vanishes because G is even.
        let alternating = PatternSum::new(vec![rat(1, 1), rat(-1, 1)], g()).unwrap();
        assert_eq!(sum_pattern(&alternating), GrossNumber::zero());

        // Over 2G + 1 (odd) items the sum is 1; same for G - 1... the
        // leftover of an odd count of a two-item pattern is one item.
        let odd_count = gn(&[(1, (2, 1)), (0, (1, 1))]);
        let alternating_odd = PatternSum::new(vec![rat(1, 1), rat(-1, 1)], odd_count).unwrap();
        assert_eq!(sum_pattern(&alternating_odd), GrossNumber::one());
        let g_minus_1 = &g() - &GrossNumber::one();
        let alternating_gm1 = PatternSum::new(vec![rat(1, 1), rat(-1, 1)], g_minus_1).unwrap();
        assert_eq!(sum_pattern(&alternating_gm1), GrossNumber::one());

        // S6: 1 + 1 - 1 repeating over G items gives G/3.
        let s6 = PatternSum::new(vec![rat(1, 1), rat(1, 1), rat(-1, 1)], g()).unwrap();
        assert_eq!(sum_pattern(&s6), GrossNumber::monomial(1, rat(1, 3)));

        // A one-item pattern degenerates to item * count.
        let constant = PatternSum::new(vec![rat(7, 2)], g()).unwrap();
        assert_eq!(sum_pattern(&constant), g().scale(&rat(7, 2)));
    }

    #[test]
    fn rearrangement_examples() {
        let alternating = PatternSum::new(vec![rat(1, 1), rat(-1, 1)], g()).unwrap();
        let (pos, neg) = rearrangement_count(&alternating);
        assert_eq!(pos, GrossNumber::monomial(1, rat(1, 2)));
        assert_eq!(neg, GrossNumber::monomial(1, rat(1, 2)));

        let s6 = PatternSum::new(vec![rat(1, 1), rat(1, 1), rat(-1, 1)], g()).unwrap();
        let (pos, neg) = rearrangement_count(&s6);
        assert_eq!(pos, GrossNumber::monomial(1, rat(2, 3)));
        assert_eq!(neg, GrossNumber::monomial(1, rat(1, 3)));
        assert_eq!(&pos + &neg, g());

        let empty = PatternSum::new(vec![rat(1, 1)], GrossNumber::zero()).unwrap();
        assert_eq!(
            rearrangement_count(&empty),
            (GrossNumber::zero(), GrossNumber::zero())
        );
    }

    #[test]
    fn pattern_matches_accumulation() {
        let pattern = vec![rat(1, 1), rat(1, 1), rat(-1, 1), rat(0, 1), rat(-5, 2)];
        for n in 0..=60u64 {
            let ps = PatternSum::new(pattern.clone(), GrossNumber::from_integer(n as i64)).unwrap();
            let closed = sum_pattern(&ps).as_rational().unwrap();
            let mut acc = ExactRational::zero();
            for i in 0..n {
                acc += pattern[(i % 5) as usize].clone();
            }
            assert_eq!(closed, acc, "n = {n}");
        }
    }

    #[test]
    fn alternating_linear_sums() {
        // S7(G) = -G/2 and the shifted counts from the same formula.
        assert_eq!(
            sum_alternating_linear(&g()).unwrap(),
            GrossNumber::monomial(1, rat(-1, 2))
        );
        let g_minus_1 = &g() - &GrossNumber::one();
        assert_eq!(
            sum_alternating_linear(&g_minus_1).unwrap(),
            GrossNumber::monomial(1, rat(1, 2))
        );
        // S7(G) = S7(G-1) - G.
        assert_eq!(
            sum_alternating_linear(&g()).unwrap(),
            &sum_alternating_linear(&g_minus_1).unwrap() - &g()
        );
    }
}
