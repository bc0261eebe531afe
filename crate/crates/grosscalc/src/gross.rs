//! Positional records over the infinite unit: exact arithmetic, ordering
//! and classification.
//!
//! A value is a finite sum of `grossdigit * G^grosspower` terms with
//! strictly decreasing integer grosspowers, the canonical positional form.
//! Finite rationals are the records with a single power-0 term, `G^-1` is
//! the multiplicative inverse of `G`, and the empty record is zero.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{GrossError, Result};
use crate::rational::ExactRational;

/// Parity of an integer-valued record.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn flip(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }

    pub fn of_bigint(n: &BigInt) -> Parity {
        if n.is_even() {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// A number in grossone positional form.
///
/// The map key is the grosspower; digits are nonzero exact rationals.
/// All operations return canonical form, so `==` is value equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GrossNumber {
    terms: BTreeMap<BigInt, ExactRational>,
}

impl GrossNumber {
    pub fn zero() -> Self {
        GrossNumber::default()
    }

    pub fn one() -> Self {
        GrossNumber::from_rational(ExactRational::one())
    }

    /// The infinite unit `G` itself.
    pub fn grossone() -> Self {
        GrossNumber::monomial(1, ExactRational::one())
    }

    pub fn from_rational(digit: ExactRational) -> Self {
        GrossNumber::monomial(0, digit)
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        GrossNumber::from_rational(ExactRational::from_integer(n))
    }

    /// Single-term record `digit * G^power`.
    pub fn monomial(power: impl Into<BigInt>, digit: ExactRational) -> Self {
        let mut terms = BTreeMap::new();
        if !digit.is_zero() {
            terms.insert(power.into(), digit);
        }
        GrossNumber { terms }
    }

    pub fn from_terms(pairs: impl IntoIterator<Item = (BigInt, ExactRational)>) -> Self {
        let mut out = GrossNumber::zero();
        for (power, digit) in pairs {
            out.add_term(&power, &digit);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in decreasing grosspower order, the record order.
    pub fn terms(&self) -> impl Iterator<Item = (&BigInt, &ExactRational)> {
        self.terms.iter().rev()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Digit at a grosspower, zero when absent.
    pub fn digit(&self, power: &BigInt) -> ExactRational {
        self.terms.get(power).cloned().unwrap_or_else(ExactRational::zero)
    }

    /// The finite-part digit c0.
    pub fn finite_digit(&self) -> ExactRational {
        self.digit(&BigInt::zero())
    }

    /// Highest-grosspower term, if any.
    pub fn leading(&self) -> Option<(&BigInt, &ExactRational)> {
        self.terms.iter().next_back()
    }

    pub fn lowest(&self) -> Option<(&BigInt, &ExactRational)> {
        self.terms.iter().next()
    }

    /// True when the value is a plain rational (no grossone content).
    pub fn is_rational(&self) -> bool {
        self.terms.keys().all(|p| p.is_zero())
    }

    pub fn as_rational(&self) -> Option<ExactRational> {
        self.is_rational().then(|| self.finite_digit())
    }

    /// The finite integer this record denotes, if it is one.
    pub fn as_finite_integer(&self) -> Option<BigInt> {
        self.as_rational().and_then(|r| r.to_integer())
    }

    fn add_term(&mut self, power: &BigInt, digit: &ExactRational) {
        if digit.is_zero() {
            return;
        }
        match self.terms.get_mut(power) {
            Some(existing) => {
                *existing += digit;
                if existing.is_zero() {
                    self.terms.remove(power);
                }
            }
            None => {
                self.terms.insert(power.clone(), digit.clone());
            }
        }
    }

    /// Sign of the value: the sign of the highest-grosspower digit.
    pub fn signum(&self) -> i32 {
        self.leading().map_or(0, |(_, digit)| digit.signum())
    }

    /// Partition into (infinite, finite, infinitesimal) parts by the sign
    /// of the grosspower. The three parts sum back to the whole.
    pub fn parts(&self) -> (GrossNumber, GrossNumber, GrossNumber) {
        let mut infinite = GrossNumber::zero();
        let mut finite = GrossNumber::zero();
        let mut infinitesimal = GrossNumber::zero();
        for (power, digit) in &self.terms {
            let target = match power.sign() {
                num_bigint::Sign::Plus => &mut infinite,
                num_bigint::Sign::NoSign => &mut finite,
                num_bigint::Sign::Minus => &mut infinitesimal,
            };
            target.terms.insert(power.clone(), digit.clone());
        }
        (infinite, finite, infinitesimal)
    }

    /// An integer count: no infinitesimal part and an integer finite digit.
    /// Rational digits at positive powers are admitted because `G/m` is an
    /// integer for every finite natural `m`.
    pub fn is_integer_valued(&self) -> bool {
        self.terms.keys().all(|p| !p.is_negative()) && self.finite_digit().is_integer()
    }

    /// Parity of an integer-valued record; every term with grosspower >= 1
    /// is even, so only the finite digit decides.
    pub fn parity(&self) -> Result<Parity> {
        if !self.is_integer_valued() {
            return Err(GrossError::NotIntegerValued);
        }
        let c0 = self.finite_digit().to_integer().expect("integer finite digit");
        Ok(Parity::of_bigint(&c0))
    }

    /// Divisibility of an integer-valued record by a finite natural:
    /// decided by the finite digit alone, since `G` is divisible by every
    /// finite natural.
    pub fn divisible_by(&self, modulus: u64) -> Result<bool> {
        if modulus == 0 {
            return Err(GrossError::DivisionByZero);
        }
        if !self.is_integer_valued() {
            return Err(GrossError::NotIntegerValued);
        }
        let c0 = self.finite_digit().to_integer().expect("integer finite digit");
        Ok(c0.mod_floor(&BigInt::from(modulus)).is_zero())
    }

    pub fn scale(&self, factor: &ExactRational) -> GrossNumber {
        if factor.is_zero() {
            return GrossNumber::zero();
        }
        GrossNumber {
            terms: self
                .terms
                .iter()
                .map(|(p, d)| (p.clone(), d * factor))
                .collect(),
        }
    }

    pub fn div_rational(&self, divisor: &ExactRational) -> Result<GrossNumber> {
        if divisor.is_zero() {
            return Err(GrossError::DivisionByZero);
        }
        Ok(self.scale(&divisor.recip()?))
    }

    /// Multiply by `digit * G^power`.
    pub fn mul_monomial(&self, power: &BigInt, digit: &ExactRational) -> GrossNumber {
        if digit.is_zero() {
            return GrossNumber::zero();
        }
        GrossNumber {
            terms: self
                .terms
                .iter()
                .map(|(p, d)| (p + power, d * digit))
                .collect(),
        }
    }

    /// Exact division: returns `q` with `q * divisor == self`, or
    /// `NotExactlyDivisible` when no finite record satisfies that.
    pub fn div_exact(&self, divisor: &GrossNumber) -> Result<GrossNumber> {
        let (lead_power, lead_digit) = match divisor.leading() {
            None => return Err(GrossError::DivisionByZero),
            Some(lead) => lead,
        };
        if self.is_zero() {
            return Ok(GrossNumber::zero());
        }
        // Any exact quotient spans grosspowers down to low(self) - low(divisor);
        // once long division walks past that bound no finite record works.
        let low_bound = self.lowest().expect("nonzero").0 - divisor.lowest().expect("nonzero").0;
        let mut remainder = self.clone();
        let mut quotient = GrossNumber::zero();
        while let Some((rem_power, rem_digit)) = remainder.leading() {
            let q_power = rem_power - lead_power;
            if q_power < low_bound {
                return Err(GrossError::NotExactlyDivisible);
            }
            let q_digit = rem_digit.checked_div(lead_digit)?;
            remainder = &remainder - &divisor.mul_monomial(&q_power, &q_digit);
            quotient.add_term(&q_power, &q_digit);
        }
        Ok(quotient)
    }

    pub fn recip(&self) -> Result<GrossNumber> {
        GrossNumber::one().div_exact(self)
    }

    /// Non-negative integer power by repeated squaring.
    pub fn pow(&self, exponent: u32) -> GrossNumber {
        let mut result = GrossNumber::one();
        let mut base = self.clone();
        let mut e = exponent;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn pow_checked(&self, exponent: &BigInt) -> Result<GrossNumber> {
        if exponent.is_negative() {
            let positive = (-exponent)
                .to_u32()
                .ok_or(GrossError::UnsupportedExponent)?;
            return self.pow(positive).recip();
        }
        let e = exponent.to_u32().ok_or(GrossError::UnsupportedExponent)?;
        Ok(self.pow(e))
    }

    /// Total order by the sign of the difference.
    pub fn compare(&self, other: &GrossNumber) -> Ordering {
        match (self - other).signum() {
            0 => Ordering::Equal,
            s if s < 0 => Ordering::Less,
            _ => Ordering::Greater,
        }
    }
}

impl PartialOrd for GrossNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GrossNumber {
    fn cmp(&self, other: &Self) -> Ordering {
        self.compare(other)
    }
}

impl fmt::Debug for GrossNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (power, digit) in self.terms() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({digit:?})*G^{power}")?;
        }
        Ok(())
    }
}

impl Neg for &GrossNumber {
    type Output = GrossNumber;
    fn neg(self) -> GrossNumber {
        GrossNumber {
            terms: self.terms.iter().map(|(p, d)| (p.clone(), -d)).collect(),
        }
    }
}

impl Neg for GrossNumber {
    type Output = GrossNumber;
    fn neg(self) -> GrossNumber {
        -&self
    }
}

impl<'a> Add<&'a GrossNumber> for &'a GrossNumber {
    type Output = GrossNumber;
    fn add(self, rhs: &'a GrossNumber) -> GrossNumber {
        let mut out = self.clone();
        for (power, digit) in &rhs.terms {
            out.add_term(power, digit);
        }
        out
    }
}

impl<'a> Sub<&'a GrossNumber> for &'a GrossNumber {
    type Output = GrossNumber;
    fn sub(self, rhs: &'a GrossNumber) -> GrossNumber {
        let mut out = self.clone();
        for (power, digit) in &rhs.terms {
            out.add_term(power, &-digit);
        }
        out
    }
}

impl<'a> Mul<&'a GrossNumber> for &'a GrossNumber {
    type Output = GrossNumber;
    fn mul(self, rhs: &'a GrossNumber) -> GrossNumber {
        let mut out = GrossNumber::zero();
        for (p1, d1) in &self.terms {
            for (p2, d2) in &rhs.terms {
                out.add_term(&(p1 + p2), &(d1 * d2));
            }
        }
        out
    }
}

macro_rules! forward_gross_binop {
    ($trait:ident, $method:ident, $assign_trait:ident, $assign_method:ident) => {
        impl $trait for GrossNumber {
            type Output = GrossNumber;
            fn $method(self, rhs: GrossNumber) -> GrossNumber {
                $trait::$method(&self, &rhs)
            }
        }
        impl<'a> $trait<&'a GrossNumber> for GrossNumber {
            type Output = GrossNumber;
            fn $method(self, rhs: &'a GrossNumber) -> GrossNumber {
                $trait::$method(&self, rhs)
            }
        }
        impl $trait<GrossNumber> for &GrossNumber {
            type Output = GrossNumber;
            fn $method(self, rhs: GrossNumber) -> GrossNumber {
                $trait::$method(self, &rhs)
            }
        }
        impl $assign_trait<&GrossNumber> for GrossNumber {
            fn $assign_method(&mut self, rhs: &GrossNumber) {
                *self = $trait::$method(&*self, rhs);
            }
        }
        impl $assign_trait for GrossNumber {
            fn $assign_method(&mut self, rhs: GrossNumber) {
                *self = $trait::$method(&*self, &rhs);
            }
        }
    };
}

forward_gross_binop!(Add, add, AddAssign, add_assign);
forward_gross_binop!(Sub, sub, SubAssign, sub_assign);
forward_gross_binop!(Mul, mul, MulAssign, mul_assign);

impl From<i64> for GrossNumber {
    fn from(n: i64) -> Self {
        GrossNumber::from_integer(n)
    }
}

impl From<ExactRational> for GrossNumber {
    fn from(r: ExactRational) -> Self {
        GrossNumber::from_rational(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

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
    fn addition_examples() {
        // G + 1 is the two-term record and exceeds G.
        let sum = &g() + &GrossNumber::one();
        assert_eq!(sum, gn(&[(1, (1, 1)), (0, (1, 1))]));
        assert_eq!(sum.compare(&g()), Ordering::Greater);

        let z = gn(&[(3, (2, 1)), (-2, (5, 7))]);
        assert_eq!(&z + &GrossNumber::zero(), z);

        let a = gn(&[(2, (1, 2)), (1, (1, 2))]);
        let b = gn(&[(2, (1, 2)), (1, (-1, 2))]);
        assert_eq!(&a + &b, gn(&[(2, (1, 1))]));
    }

    #[test]
    fn multiplication_examples() {
        let inv = GrossNumber::monomial(-1, rat(1, 1));
        assert_eq!(&inv * &g(), GrossNumber::one());
        assert_eq!(&GrossNumber::zero() * &g(), GrossNumber::zero());

        let plus = &g() + &GrossNumber::one();
        let minus = &g() - &GrossNumber::one();
        assert_eq!(&plus * &minus, gn(&[(2, (1, 1)), (0, (-1, 1))]));
    }

    #[test]
    fn exact_division() {
        assert_eq!(g().div_exact(&g()).unwrap(), GrossNumber::one());
        assert_eq!(
            g().div_exact(&GrossNumber::from_integer(2)).unwrap(),
            GrossNumber::monomial(1, rat(1, 2))
        );
        assert_eq!(
            GrossNumber::one().div_exact(&(&g() + &GrossNumber::one())),
            Err(GrossError::NotExactlyDivisible)
        );
        assert_eq!(
            g().div_exact(&GrossNumber::zero()),
            Err(GrossError::DivisionByZero)
        );
        // (G^2 - 1) / (G + 1) = G - 1 exactly.
        let num = gn(&[(2, (1, 1)), (0, (-1, 1))]);
        let den = gn(&[(1, (1, 1)), (0, (1, 1))]);
        assert_eq!(num.div_exact(&den).unwrap(), gn(&[(1, (1, 1)), (0, (-1, 1))]));
    }

    #[test]
    fn powers() {
        assert_eq!(g().pow(0), GrossNumber::one());
        assert_eq!(GrossNumber::zero().pow(5), GrossNumber::zero());
        // (G + G^-2)^3 = G^3 + 3 + 3G^-3 + G^-6, a binomial expansion.
        let base = gn(&[(1, (1, 1)), (-2, (1, 1))]);
        let expected = gn(&[(3, (1, 1)), (0, (3, 1)), (-3, (3, 1)), (-6, (1, 1))]);
        assert_eq!(base.pow(3), expected);
    }

    #[test]
    fn ordering_examples() {
        assert_eq!((&g() + &GrossNumber::one()).compare(&g()), Ordering::Greater);
        let one_plus_inv = &GrossNumber::one() + &GrossNumber::monomial(-1, rat(1, 1));
        assert_eq!(one_plus_inv.compare(&GrossNumber::one()), Ordering::Greater);
        let half_g = GrossNumber::monomial(1, rat(1, 2));
        assert_eq!(half_g.compare(&g()), Ordering::Less);
        let two_g_plus_one = gn(&[(1, (2, 1)), (0, (1, 1))]);
        assert_eq!(g().compare(&two_g_plus_one), Ordering::Less);
    }

    #[test]
    fn parts_partition() {
        let sample = gn(&[(0, (789, 100)), (-4, (37, 1))]);
        let (inf, fin, eps) = sample.parts();
        assert_eq!(inf, GrossNumber::zero());
        assert_eq!(fin, GrossNumber::from_rational(rat(789, 100)));
        assert_eq!(eps, GrossNumber::monomial(-4, rat(37, 1)));

        let (inf, fin, eps) = g().parts();
        assert_eq!(inf, g());
        assert!(fin.is_zero() && eps.is_zero());

        let both = gn(&[(2, (1, 2)), (1, (1, 2))]);
        let (inf, fin, eps) = both.parts();
        assert_eq!(inf, both);
        assert!(fin.is_zero() && eps.is_zero());
        assert_eq!(&(&inf + &fin) + &eps, both);
    }

    #[test]
    fn parity_examples() {
        assert_eq!(g().parity().unwrap(), Parity::Even);
        let two_g_plus_one = gn(&[(1, (2, 1)), (0, (1, 1))]);
        assert_eq!(two_g_plus_one.parity().unwrap(), Parity::Odd);
        let g2_minus_one = gn(&[(2, (1, 1)), (0, (-1, 1))]);
        assert_eq!(g2_minus_one.parity().unwrap(), Parity::Odd);
        let g_minus_one = gn(&[(1, (1, 1)), (0, (-1, 1))]);
        assert_eq!(g_minus_one.parity().unwrap(), Parity::Odd);
        // G/2 is an even integer count; G/3 likewise integer-valued.
        assert_eq!(GrossNumber::monomial(1, rat(1, 2)).parity().unwrap(), Parity::Even);
        assert_eq!(
            GrossNumber::monomial(-1, rat(1, 1)).parity(),
            Err(GrossError::NotIntegerValued)
        );
        assert_eq!(
            GrossNumber::from_rational(rat(1, 2)).parity(),
            Err(GrossError::NotIntegerValued)
        );
    }

    #[test]
    fn divisibility() {
        assert!(g().divisible_by(3).unwrap());
        let g_plus_one = &g() + &GrossNumber::one();
        assert!(!g_plus_one.divisible_by(2).unwrap());
        assert!(GrossNumber::zero().divisible_by(7).unwrap());
        // G - 1 = ... c0 = -1: -1 mod 2 = 1.
        let g_minus_one = &g() - &GrossNumber::one();
        assert!(!g_minus_one.divisible_by(2).unwrap());
        assert!(g_minus_one.divisible_by(1).unwrap());
    }

    #[test]
    fn grossone_identities() {
        // 0*G = 0, G - G = 0, G/G = 1, G^0 = 1.
        assert_eq!(&GrossNumber::zero() * &g(), GrossNumber::zero());
        assert_eq!(&g() - &g(), GrossNumber::zero());
        assert_eq!(g().div_exact(&g()).unwrap(), GrossNumber::one());
        assert_eq!(g().pow(0), GrossNumber::one());
    }
}
