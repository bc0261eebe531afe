//! Polynomials in a formal count symbol `n` over exact rationals, the
//! carrier for power-sum closed forms.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;

use crate::gross::GrossNumber;
use crate::rational::ExactRational;

/// Polynomial in `n`; zero coefficients are never stored, so structural
/// equality is polynomial identity.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct PolyN {
    coeffs: BTreeMap<usize, ExactRational>,
}

impl PolyN {
    pub fn zero() -> Self {
        PolyN::default()
    }

    pub fn constant(c: ExactRational) -> Self {
        PolyN::from_coeffs([(0, c)])
    }

    /// The monomial `n`.
    pub fn n() -> Self {
        PolyN::from_coeffs([(1, ExactRational::one())])
    }

    /// `n + shift`.
    pub fn n_plus(shift: i64) -> Self {
        PolyN::from_coeffs([
            (1, ExactRational::one()),
            (0, ExactRational::from_integer(shift)),
        ])
    }

    pub fn from_coeffs(pairs: impl IntoIterator<Item = (usize, ExactRational)>) -> Self {
        let mut out = PolyN::zero();
        for (degree, coeff) in pairs {
            out.add_coeff(degree, &coeff);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn coeff(&self, degree: usize) -> ExactRational {
        self.coeffs
            .get(&degree)
            .cloned()
            .unwrap_or_else(ExactRational::zero)
    }

    /// Coefficients in increasing degree order.
    pub fn coeffs(&self) -> impl Iterator<Item = (usize, &ExactRational)> {
        self.coeffs.iter().map(|(d, c)| (*d, c))
    }

    fn add_coeff(&mut self, degree: usize, coeff: &ExactRational) {
        if coeff.is_zero() {
            return;
        }
        match self.coeffs.get_mut(&degree) {
            Some(existing) => {
                *existing += coeff;
                if existing.is_zero() {
                    self.coeffs.remove(&degree);
                }
            }
            None => {
                self.coeffs.insert(degree, coeff.clone());
            }
        }
    }

    pub fn scale(&self, factor: &ExactRational) -> PolyN {
        if factor.is_zero() {
            return PolyN::zero();
        }
        PolyN {
            coeffs: self.coeffs.iter().map(|(d, c)| (*d, c * factor)).collect(),
        }
    }

    /// Horner evaluation at an exact rational point.
    pub fn eval_rational(&self, x: &ExactRational) -> ExactRational {
        let top = match self.degree() {
            None => return ExactRational::zero(),
            Some(d) => d,
        };
        let mut acc = ExactRational::zero();
        for d in (0..=top).rev() {
            acc = &(&acc * x) + &self.coeff(d);
        }
        acc
    }

    /// Evaluation at a positional record, exact.
    pub fn eval_gross(&self, x: &GrossNumber) -> GrossNumber {
        let top = match self.degree() {
            None => return GrossNumber::zero(),
            Some(d) => d,
        };
        let mut acc = GrossNumber::zero();
        for d in (0..=top).rev() {
            acc = &(&acc * x) + &GrossNumber::from_rational(self.coeff(d));
        }
        acc
    }

    pub fn eval_integer(&self, x: i64) -> ExactRational {
        self.eval_rational(&ExactRational::from_integer(x))
    }
}

impl fmt::Debug for PolyN {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (degree, coeff) in self.coeffs.iter().rev() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match degree {
                0 => write!(f, "{coeff}")?,
                1 => write!(f, "({coeff})n")?,
                d => write!(f, "({coeff})n^{d}")?,
            }
        }
        Ok(())
    }
}

impl Neg for &PolyN {
    type Output = PolyN;
    fn neg(self) -> PolyN {
        PolyN {
            coeffs: self.coeffs.iter().map(|(d, c)| (*d, -c)).collect(),
        }
    }
}

impl Neg for PolyN {
    type Output = PolyN;
    fn neg(self) -> PolyN {
        -&self
    }
}

impl<'a> Add<&'a PolyN> for &'a PolyN {
    type Output = PolyN;
    fn add(self, rhs: &'a PolyN) -> PolyN {
        let mut out = self.clone();
        for (degree, coeff) in &rhs.coeffs {
            out.add_coeff(*degree, coeff);
        }
        out
    }
}

impl<'a> Sub<&'a PolyN> for &'a PolyN {
    type Output = PolyN;
    fn sub(self, rhs: &'a PolyN) -> PolyN {
        let mut out = self.clone();
        for (degree, coeff) in &rhs.coeffs {
            out.add_coeff(*degree, &-coeff);
        }
        out
    }
}

impl<'a> Mul<&'a PolyN> for &'a PolyN {
    type Output = PolyN;
    fn mul(self, rhs: &'a PolyN) -> PolyN {
        let mut out = PolyN::zero();
        for (d1, c1) in &self.coeffs {
            for (d2, c2) in &rhs.coeffs {
                out.add_coeff(d1 + d2, &(c1 * c2));
            }
        }
        out
    }
}

macro_rules! forward_poly_binop {
    ($trait:ident, $method:ident, $assign_trait:ident, $assign_method:ident) => {
        impl $trait for PolyN {
            type Output = PolyN;
            fn $method(self, rhs: PolyN) -> PolyN {
                $trait::$method(&self, &rhs)
            }
        }
        impl<'a> $trait<&'a PolyN> for PolyN {
            type Output = PolyN;
            fn $method(self, rhs: &'a PolyN) -> PolyN {
                $trait::$method(&self, rhs)
            }
        }
        impl $trait<PolyN> for &PolyN {
            type Output = PolyN;
            fn $method(self, rhs: PolyN) -> PolyN {
                $trait::$method(self, &rhs)
            }
        }
        impl $assign_trait<&PolyN> for PolyN {
            fn $assign_method(&mut self, rhs: &PolyN) {
                *self = $trait::$method(&*self, rhs);
            }
        }
        impl $assign_trait for PolyN {
            fn $assign_method(&mut self, rhs: PolyN) {
                *self = $trait::$method(&*self, &rhs);
            }
        }
    };
}

forward_poly_binop!(Add, add, AddAssign, add_assign);
forward_poly_binop!(Sub, sub, SubAssign, sub_assign);
forward_poly_binop!(Mul, mul, MulAssign, mul_assign);

/// Exact binomial coefficient over big integers.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Exact factorial.
pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::from(1), |acc, i| acc * BigInt::from(i))
}
