//! Exact integration of polynomials with record coefficients over
//! intervals with explicit (possibly infinite) record endpoints. The
//! antiderivative stays inside the numeral system, so every result is a
//! plain record.

use crate::gross::GrossNumber;
use crate::rational::ExactRational;

/// Polynomial in the integration variable with record coefficients,
/// indexed by degree. Trailing zero coefficients are dropped.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GrossPolynomial {
    coeffs: Vec<GrossNumber>,
}

impl GrossPolynomial {
    pub fn new(coeffs: Vec<GrossNumber>) -> Self {
        let mut coeffs = coeffs;
        while coeffs.last().is_some_and(GrossNumber::is_zero) {
            coeffs.pop();
        }
        GrossPolynomial { coeffs }
    }

    /// The monomial `x^degree`.
    pub fn x_power(degree: usize) -> Self {
        let mut coeffs = vec![GrossNumber::zero(); degree + 1];
        coeffs[degree] = GrossNumber::one();
        GrossPolynomial::new(coeffs)
    }

    pub fn coeffs(&self) -> &[GrossNumber] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, factor: &GrossNumber) -> GrossPolynomial {
        GrossPolynomial::new(self.coeffs.iter().map(|c| c * factor).collect())
    }

    pub fn add(&self, rhs: &GrossPolynomial) -> GrossPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeff = |poly: &GrossPolynomial, k: usize| {
            poly.coeffs.get(k).cloned().unwrap_or_else(GrossNumber::zero)
        };
        GrossPolynomial::new((0..len).map(|k| &coeff(self, k) + &coeff(rhs, k)).collect())
    }
}

/// Exact definite integral `sum_k c_k (b^(k+1) - a^(k+1)) / (k+1)`.
pub fn integrate(p: &GrossPolynomial, a: &GrossNumber, b: &GrossNumber) -> GrossNumber {
    let mut total = GrossNumber::zero();
    for (k, coeff) in p.coeffs.iter().enumerate() {
        if coeff.is_zero() {
            continue;
        }
        let degree = (k + 1) as u32;
        let span = &b.pow(degree) - &a.pow(degree);
        total += (coeff * &span).scale(&ExactRational::ratio(1, degree as i64));
    }
    total
}
