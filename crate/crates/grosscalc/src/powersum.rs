//! The multiply-by-x-and-differentiate recurrence for power sums
//! `sum_{i=1}^{n} i^m x^(i-1)`, its evaluation at `x = -1`, the
//! infinitesimal-perturbation standard part at `x = 1`, and the
//! Bernoulli-number closed forms that serve as the independent route.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{GrossError, Result};
use crate::gross::{GrossNumber, Parity};
use crate::poly::{binomial, PolyN};
use crate::rational::ExactRational;

/// A rational function of `x` with polynomial-in-`n` coefficients:
///
/// ```text
/// [ sum_j shifted[j] * x^(n+j)  +  sum_i pure[i] * x^i ] / (1-x)^den_power
/// ```
///
/// State `m` (after `m` steps from [`geom_closed`]) represents
/// `sum_{i=1}^{n} i^m x^(i-1)`; state 0 is `sum_{i=0}^{n} x^i`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalForm {
    order: usize,
    den_power: usize,
    shifted: BTreeMap<i64, PolyN>,
    pure: BTreeMap<usize, PolyN>,
}

fn insert_poly<K: Ord>(map: &mut BTreeMap<K, PolyN>, key: K, value: PolyN) {
    if value.is_zero() {
        return;
    }
    match map.get_mut(&key) {
        Some(existing) => {
            *existing += value;
            if existing.is_zero() {
                map.remove(&key);
            }
        }
        None => {
            map.insert(key, value);
        }
    }
}

impl RationalForm {
    /// The recurrence step index `m` this state represents.
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn den_power(&self) -> usize {
        self.den_power
    }

    /// Coefficient polynomial of `x^(n+j)`.
    pub fn shifted_coeff(&self, j: i64) -> PolyN {
        self.shifted.get(&j).cloned().unwrap_or_default()
    }

    /// Coefficient polynomial of `x^i`.
    pub fn pure_coeff(&self, i: usize) -> PolyN {
        self.pure.get(&i).cloned().unwrap_or_default()
    }

    /// Multiply the whole form by `x`.
    fn mul_x(&self) -> RationalForm {
        RationalForm {
            order: self.order,
            den_power: self.den_power,
            shifted: self
                .shifted
                .iter()
                .map(|(j, p)| (j + 1, p.clone()))
                .collect(),
            pure: self.pure.iter().map(|(i, p)| (i + 1, p.clone())).collect(),
        }
    }

    /// d/dx of `N/(1-x)^d` recombined over `(1-x)^(d+1)`:
    /// the new numerator is `N'(1-x) + d*N`.
    fn differentiate(&self) -> RationalForm {
        let d_factor = PolyN::constant(ExactRational::from_integer(self.den_power as i64));
        let mut shifted: BTreeMap<i64, PolyN> = BTreeMap::new();
        let mut pure: BTreeMap<usize, PolyN> = BTreeMap::new();
        for (&j, p) in &self.shifted {
            // d/dx x^(n+j) = (n+j) x^(n+j-1)
            let derived = p * &PolyN::n_plus(j);
            insert_poly(&mut shifted, j - 1, derived.clone());
            insert_poly(&mut shifted, j, &(&d_factor * p) - &derived);
        }
        for (&i, q) in &self.pure {
            if i > 0 {
                let derived = q.scale(&ExactRational::from_integer(i as i64));
                insert_poly(&mut pure, i - 1, derived.clone());
                insert_poly(&mut pure, i, &(&d_factor * q) - &derived);
            } else {
                insert_poly(&mut pure, 0, &d_factor * q);
            }
        }
        RationalForm {
            order: self.order,
            den_power: self.den_power + 1,
            shifted,
            pure,
        }
    }
}

/// The closed geometric form `(1 - x^(n+1)) / (1 - x)`, state 0.
pub fn geom_closed() -> RationalForm {
    let mut shifted = BTreeMap::new();
    shifted.insert(1, PolyN::constant(-ExactRational::one()));
    let mut pure = BTreeMap::new();
    pure.insert(0, PolyN::constant(ExactRational::one()));
    RationalForm {
        order: 0,
        den_power: 1,
        shifted,
        pure,
    }
}

/// One recurrence step: plain differentiation from state 0, multiply by
/// `x` then differentiate from every later state.
pub fn step(rf: &RationalForm) -> RationalForm {
    let base = if rf.order == 0 { rf.clone() } else { rf.mul_x() };
    let mut next = base.differentiate();
    next.order = rf.order + 1;
    next
}

/// State `m` reached by iterating [`step`] from [`geom_closed`].
pub fn state(m: usize) -> RationalForm {
    let mut rf = geom_closed();
    for _ in 0..m {
        rf = step(&rf);
    }
    rf
}

impl RationalForm {
    /// Substitute `x = -1`, resolving `(-1)^(n+j)` by the given parity of
    /// `n`; the denominator folds to `2^den_power`.
    pub fn eval_at_minus_one(&self, parity: Parity) -> PolyN {
        let sign_n: i64 = match parity {
            Parity::Even => 1,
            Parity::Odd => -1,
        };
        let mut acc = PolyN::zero();
        for (&j, p) in &self.shifted {
            let sign = sign_n * if j.rem_euclid(2) == 0 { 1 } else { -1 };
            acc += p.scale(&ExactRational::from_integer(sign));
        }
        for (&i, q) in &self.pure {
            let sign: i64 = if i % 2 == 0 { 1 } else { -1 };
            acc += q.scale(&ExactRational::from_integer(sign));
        }
        let denom = ExactRational::from_integer(2).pow_checked(&BigInt::from(self.den_power))
            .expect("small power");
        acc.scale(&denom.recip().expect("nonzero"))
    }

    /// Standard part at `x = 1` through an infinitesimal perturbation:
    /// substitute `x = 1 + delta`, expand binomially to order `den_power`,
    /// require every lower-order delta coefficient to vanish identically,
    /// and return the order-`den_power` coefficient against `(-delta)^d`.
    pub fn standard_part_at_one(&self) -> Result<PolyN> {
        let d = self.den_power;
        let mut delta: Vec<PolyN> = vec![PolyN::zero(); d + 1];
        for (&j, p) in &self.shifted {
            // (1+delta)^(n+j) = sum_t C(n+j, t) delta^t, truncated at d.
            let mut coeff = PolyN::constant(ExactRational::one());
            for (t, slot) in delta.iter_mut().enumerate() {
                if t > 0 {
                    // C(n+j, t) = C(n+j, t-1) * (n+j-t+1)/t
                    coeff = (&coeff * &PolyN::n_plus(j - t as i64 + 1))
                        .scale(&ExactRational::ratio(1, t as i64));
                }
                *slot += p * &coeff;
            }
        }
        for (&i, q) in &self.pure {
            for (t, slot) in delta.iter_mut().enumerate().take(d + 1) {
                let c = binomial(i as u64, t as u64);
                *slot += q.scale(&ExactRational::from_integer(c));
            }
        }
        for low in delta.iter().take(d) {
            if !low.is_zero() {
                return Err(GrossError::SingularityNotRemovable);
            }
        }
        let sign = if d.is_multiple_of(2) { 1 } else { -1 };
        Ok(delta[d].scale(&ExactRational::from_integer(sign)))
    }

    /// Evaluate at a finite count and rational `x != 1`, exactly.
    pub fn eval_finite(&self, n: u64, x: &ExactRational) -> Result<ExactRational> {
        if x.is_one() {
            return Err(GrossError::DivisionByZero);
        }
        let n_rat = ExactRational::from_integer(n);
        let mut numerator = ExactRational::zero();
        for (&j, p) in &self.shifted {
            let exponent = BigInt::from(n) + BigInt::from(j);
            if exponent.is_negative() {
                return Err(GrossError::InvalidCount);
            }
            numerator += p.eval_rational(&n_rat) * x.pow_checked(&exponent)?;
        }
        for (&i, q) in &self.pure {
            numerator += q.eval_rational(&n_rat) * x.pow_checked(&BigInt::from(i))?;
        }
        let denom = (&ExactRational::one() - x).pow_checked(&BigInt::from(self.den_power))?;
        numerator.checked_div(&denom)
    }
}

/// Bernoulli number `B_j` in the `B_1 = +1/2` convention, by the
/// recurrence `sum_{k<=j} C(j+1, k) B_k = j + 1`.
pub fn bernoulli(j: usize) -> ExactRational {
    bernoulli_table(j).pop().expect("nonempty table")
}

fn bernoulli_table(max: usize) -> Vec<ExactRational> {
    let mut table: Vec<ExactRational> = Vec::with_capacity(max + 1);
    for j in 0..=max {
        let mut acc = ExactRational::from_integer(j as i64 + 1);
        for (k, b) in table.iter().enumerate() {
            let c = ExactRational::from_integer(binomial(j as u64 + 1, k as u64));
            acc -= c * b.clone();
        }
        table.push(acc.checked_div(&ExactRational::from_integer(j as i64 + 1)).expect("j+1 > 0"));
    }
    table
}

/// Closed form for `sum_{i=1}^{n} i^m` as a polynomial in `n`:
/// `(1/(m+1)) * sum_{j=0}^{m} C(m+1, j) B_j n^(m+1-j)`.
pub fn faulhaber(m: usize) -> PolyN {
    let bernoullis = bernoulli_table(m);
    let mut acc = PolyN::zero();
    for (j, b) in bernoullis.iter().enumerate() {
        let c = ExactRational::from_integer(binomial(m as u64 + 1, j as u64));
        acc += PolyN::from_coeffs([(m + 1 - j, c * b.clone())]);
    }
    acc.scale(&ExactRational::ratio(1, m as i64 + 1))
}

/// `sum_{i=1}^{n} i^m (-1)^(i-1)` for an integer-valued record `n`,
/// resolved through the parity of `n`.
pub fn alternating_power_sum(m: usize, n: &GrossNumber) -> Result<GrossNumber> {
    let parity = n.parity()?;
    if m == 0 {
        return Ok(match parity {
            Parity::Even => GrossNumber::zero(),
            Parity::Odd => GrossNumber::one(),
        });
    }
    Ok(state(m).eval_at_minus_one(parity).eval_gross(n))
}
