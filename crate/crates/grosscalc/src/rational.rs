//! Arbitrary-precision rationals in canonical form: the grossdigit scalar.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};

use crate::error::{GrossError, Result};

/// Largest exponent magnitude accepted by [`ExactRational::pow_checked`].
/// Values above this are representable in principle but useless in practice
/// and only serve to exhaust memory.
pub const MAX_POW: u32 = 1 << 20;

/// An exact rational with `gcd(|num|, den) = 1`, `den >= 1` and zero stored
/// as `0/1`. Canonical form is maintained by every operation, so structural
/// equality is value equality.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactRational(BigRational);

impl ExactRational {
    pub fn new(numer: BigInt, denom: BigInt) -> Result<Self> {
        if denom.is_zero() {
            return Err(GrossError::DivisionByZero);
        }
        Ok(ExactRational(BigRational::new(numer, denom)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        ExactRational(BigRational::from_integer(n.into()))
    }

    pub fn ratio(numer: i64, denom: i64) -> Self {
        ExactRational(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn zero() -> Self {
        ExactRational(BigRational::zero())
    }

    pub fn one() -> Self {
        ExactRational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        ExactRational(self.0.abs())
    }

    pub fn signum(&self) -> i32 {
        match self.0.numer().sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    /// The integer this rational denotes, if any.
    pub fn to_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.0.to_integer())
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(GrossError::DivisionByZero);
        }
        Ok(ExactRational(self.0.recip()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(GrossError::DivisionByZero);
        }
        Ok(ExactRational(&self.0 / &rhs.0))
    }

    /// Exact integer power with a resource bound on the exponent magnitude.
    pub fn pow_checked(&self, exponent: &BigInt) -> Result<Self> {
        if exponent.is_zero() {
            // 0^0 = 1 by the empty-product convention.
            return Ok(Self::one());
        }
        if self.is_zero() {
            return if exponent.is_negative() {
                Err(GrossError::DivisionByZero)
            } else {
                Ok(Self::zero())
            };
        }
        let magnitude = exponent
            .abs()
            .to_u32()
            .filter(|&m| m <= MAX_POW)
            .ok_or(GrossError::UnsupportedExponent)?;
        let powered = ExactRational(self.0.clone().pow(magnitude as i32));
        if exponent.is_negative() {
            powered.recip()
        } else {
            Ok(powered)
        }
    }

    /// Exact `q`-th root when one exists in the rationals.
    pub fn exact_root(&self, q: u32) -> Result<Self> {
        if q == 0 {
            return Err(GrossError::UnsupportedExponent);
        }
        if q == 1 {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        if self.is_negative() && q.is_multiple_of(2) {
            return Err(GrossError::UnrepresentablePower);
        }
        let root_abs = |value: &BigInt| -> Option<BigInt> {
            let mag = value.magnitude().nth_root(q);
            (BigUint::pow(&mag, q) == *value.magnitude()).then(|| BigInt::from(mag))
        };
        let numer = root_abs(self.numer()).ok_or(GrossError::UnrepresentablePower)?;
        let denom = root_abs(self.denom()).ok_or(GrossError::UnrepresentablePower)?;
        let numer = if self.is_negative() { -numer } else { numer };
        Self::new(numer, denom)
    }

    /// Parses `DIGITS`, `DIGITS.DIGITS` or `DIGITS/DIGITS` (optionally
    /// signed) into an exact value; decimal literals convert exactly.
    pub fn parse(text: &str) -> Result<Self> {
        let bad = || GrossError::SyntaxError {
            pos: 0,
            msg: format!("invalid rational literal `{text}`"),
        };
        let (sign, body) = match text.strip_prefix('-') {
            Some(rest) => (-1, rest),
            None => (1, text),
        };
        let value = if let Some((int_part, frac_part)) = body.split_once('.') {
            if int_part.is_empty() || frac_part.is_empty() {
                return Err(bad());
            }
            let digits = format!("{int_part}{frac_part}");
            let numer = BigInt::from_str(&digits).map_err(|_| bad())?;
            let denom = BigInt::from(10u32).pow(frac_part.len() as u32);
            BigRational::new(numer, denom)
        } else if let Some((numer, denom)) = body.split_once('/') {
            let numer = BigInt::from_str(numer).map_err(|_| bad())?;
            let denom = BigInt::from_str(denom).map_err(|_| bad())?;
            if denom.is_zero() {
                return Err(GrossError::DivisionByZero);
            }
            BigRational::new(numer, denom)
        } else {
            BigRational::from_integer(BigInt::from_str(body).map_err(|_| bad())?)
        };
        Ok(ExactRational(if sign < 0 { -value } else { value }))
    }

    /// True when the denominator is of the form 2^a·5^b, i.e. the value has
    /// a finite decimal expansion.
    pub fn has_terminating_decimal(&self) -> bool {
        self.decimal_scale().is_some()
    }

    /// Returns (a, b) with denom = 2^a·5^b when the expansion terminates.
    fn decimal_scale(&self) -> Option<(u32, u32)> {
        let mut den = self.denom().magnitude().clone();
        let two = BigUint::from(2u32);
        let five = BigUint::from(5u32);
        let mut twos = 0u32;
        let mut fives = 0u32;
        while (&den % &two).is_zero() {
            den /= &two;
            twos += 1;
        }
        while (&den % &five).is_zero() {
            den /= &five;
            fives += 1;
        }
        den.is_one().then_some((twos, fives))
    }

    /// Exact decimal string when terminating, `num/den` otherwise.
    pub fn to_decimal_or_fraction(&self) -> String {
        match self.decimal_scale() {
            Some((twos, fives)) => {
                let places = twos.max(fives);
                if places == 0 {
                    return self.numer().to_string();
                }
                let scale = BigInt::from(10u32).pow(places);
                let scaled = (self.numer() * &scale) / self.denom();
                let digits = scaled.magnitude().to_string();
                let digits = if digits.len() <= places as usize {
                    format!("{:0>width$}", digits, width = places as usize + 1)
                } else {
                    digits
                };
                let split = digits.len() - places as usize;
                let sign = if self.is_negative() { "-" } else { "" };
                format!("{sign}{}.{}", &digits[..split], &digits[split..])
            }
            None => format!("{}/{}", self.numer(), self.denom()),
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn cmp_value(&self, other: &Self) -> Ordering {
        self.0.cmp(&other.0)
    }
}

impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_decimal_or_fraction())
    }
}

impl fmt::Debug for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

impl From<i64> for ExactRational {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl From<BigInt> for ExactRational {
    fn from(n: BigInt) -> Self {
        Self::from_integer(n)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $assign_trait:ident, $assign_method:ident) => {
        impl<'a> $trait<&'a ExactRational> for &'a ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: &'a ExactRational) -> ExactRational {
                ExactRational($trait::$method(&self.0, &rhs.0))
            }
        }
        impl $trait for ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: ExactRational) -> ExactRational {
                $trait::$method(&self, &rhs)
            }
        }
        impl<'a> $trait<&'a ExactRational> for ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: &'a ExactRational) -> ExactRational {
                $trait::$method(&self, rhs)
            }
        }
        impl $trait<ExactRational> for &ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: ExactRational) -> ExactRational {
                $trait::$method(self, &rhs)
            }
        }
        impl $assign_trait for ExactRational {
            fn $assign_method(&mut self, rhs: ExactRational) {
                *self = $trait::$method(&*self, &rhs);
            }
        }
        impl $assign_trait<&ExactRational> for ExactRational {
            fn $assign_method(&mut self, rhs: &ExactRational) {
                *self = $trait::$method(&*self, rhs);
            }
        }
    };
}

forward_binop!(Add, add, AddAssign, add_assign);
forward_binop!(Sub, sub, SubAssign, sub_assign);
forward_binop!(Mul, mul, MulAssign, mul_assign);

impl Div for ExactRational {
    type Output = ExactRational;
    fn div(self, rhs: ExactRational) -> ExactRational {
        Div::div(&self, &rhs)
    }
}

impl<'a> Div<&'a ExactRational> for &'a ExactRational {
    type Output = ExactRational;
    fn div(self, rhs: &'a ExactRational) -> ExactRational {
        assert!(!rhs.is_zero(), "division by zero rational");
        ExactRational(&self.0 / &rhs.0)
    }
}

impl DivAssign<&ExactRational> for ExactRational {
    fn div_assign(&mut self, rhs: &ExactRational) {
        *self = Div::div(&*self, rhs);
    }
}

impl Neg for ExactRational {
    type Output = ExactRational;
    fn neg(self) -> ExactRational {
        ExactRational(-self.0)
    }
}

impl Neg for &ExactRational {
    type Output = ExactRational;
    fn neg(self) -> ExactRational {
        ExactRational(-&self.0)
    }
}
