//! Records extended with exponential terms `coeff * base^exponent`, the
//! shapes produced by geometric series with infinite item counts and by
//! truncated Euler factors.
//!
//! The representation is deliberately partial: only term shapes that the
//! supported computations produce are closed over, and anything else is a
//! typed error instead of an approximation.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{GrossError, Result};
use crate::gross::{GrossNumber, Parity};
use crate::rational::ExactRational;

/// One exponential term `coeff * base^exponent` in canonical form:
/// `base > 1` is not a perfect power of a smaller rational, and the
/// exponent carries no integer finite digit (that factor is folded into
/// the coefficient).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExpTerm {
    coeff: ExactRational,
    base: ExactRational,
    exponent: GrossNumber,
}

impl ExpTerm {
    pub fn coeff(&self) -> &ExactRational {
        &self.coeff
    }

    pub fn base(&self) -> &ExactRational {
        &self.base
    }

    pub fn exponent(&self) -> &GrossNumber {
        &self.exponent
    }

    /// Leading (grosspower, digit) of the exponent. Canonical terms never
    /// have an empty exponent.
    fn exponent_leading(&self) -> (&BigInt, &ExactRational) {
        self.exponent.leading().expect("canonical exponent is nonzero")
    }

    /// The term grows beyond every positional record: the exponent has a
    /// positive leading grosspower with a positive digit.
    pub fn is_infinite(&self) -> bool {
        let (power, digit) = self.exponent_leading();
        power.is_positive() && digit.signum() > 0
    }

    /// The term is infinitesimal: positive leading grosspower, negative
    /// digit, so the magnitude is a reciprocal of an infinite exponential.
    pub fn is_infinitesimal(&self) -> bool {
        let (power, digit) = self.exponent_leading();
        power.is_positive() && digit.signum() < 0
    }

    fn negated_exponent(&self) -> ExpTerm {
        ExpTerm {
            coeff: self.coeff.clone(),
            base: self.base.clone(),
            exponent: -&self.exponent,
        }
    }
}

/// Either a folded rational or a canonical exponential term.
enum Folded {
    Rational(ExactRational),
    Term(ExpTerm),
}

/// Reduce a base > 1 to its smallest rational root, scaling the exponent:
/// `4^E -> 2^(2E)`, `(8/27)^E` (after reciprocal normalization) -> `(2/3)^(3E)`.
fn reduce_perfect_power(base: ExactRational, exponent: GrossNumber) -> (ExactRational, GrossNumber) {
    let max_m = base.numer().magnitude().bits();
    for m in (2..=max_m as u32).rev() {
        if let Ok(root) = base.exact_root(m) {
            let scale = GrossNumber::from_integer(m as i64);
            return (root, &exponent * &scale);
        }
    }
    (base, exponent)
}

/// Canonicalize `coeff * base^exponent`. Requires a positive base; callers
/// resolve negative bases through parity first.
fn normalize_term(
    coeff: ExactRational,
    base: ExactRational,
    exponent: GrossNumber,
) -> Result<Folded> {
    if coeff.is_zero() {
        return Ok(Folded::Rational(ExactRational::zero()));
    }
    if base.signum() <= 0 {
        return Err(GrossError::UnrepresentablePower);
    }
    if base.is_one() {
        return Ok(Folded::Rational(coeff));
    }
    let (base, exponent) = if base.cmp_value(&ExactRational::one()) == Ordering::Less {
        (base.recip()?, -exponent)
    } else {
        (base, exponent)
    };
    if let Some(finite) = exponent.as_rational() {
        return match finite.to_integer() {
            Some(k) => Ok(Folded::Rational(coeff * base.pow_checked(&k)?)),
            None => Err(GrossError::UnrepresentablePower),
        };
    }
    let (base, exponent) = reduce_perfect_power(base, exponent);
    let (coeff, exponent) = match exponent.finite_digit().to_integer() {
        Some(k) if !k.is_zero() => {
            let folded = coeff * base.pow_checked(&k)?;
            (folded, &exponent - &GrossNumber::from_integer(k))
        }
        _ => (coeff, exponent),
    };
    Ok(Folded::Term(ExpTerm { coeff, base, exponent }))
}

/// A positional record plus exponential terms, kept sorted by
/// (base, exponent) with like terms combined.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ExpValue {
    gross: GrossNumber,
    terms: Vec<ExpTerm>,
}

impl ExpValue {
    pub fn zero() -> Self {
        ExpValue::default()
    }

    pub fn one() -> Self {
        ExpValue::from_gross(GrossNumber::one())
    }

    pub fn from_gross(gross: GrossNumber) -> Self {
        ExpValue { gross, terms: Vec::new() }
    }

    pub fn from_rational(r: ExactRational) -> Self {
        ExpValue::from_gross(GrossNumber::from_rational(r))
    }

    /// Build `coeff * base^exponent` in canonical form (positive base).
    pub fn exponential(
        coeff: ExactRational,
        base: ExactRational,
        exponent: GrossNumber,
    ) -> Result<Self> {
        let mut value = ExpValue::zero();
        match normalize_term(coeff, base, exponent)? {
            Folded::Rational(r) => value.gross += GrossNumber::from_rational(r),
            Folded::Term(t) => value.push_term(t),
        }
        Ok(value)
    }

    pub fn gross_part(&self) -> &GrossNumber {
        &self.gross
    }

    pub fn exp_terms(&self) -> &[ExpTerm] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.gross.is_zero() && self.terms.is_empty()
    }

    /// The plain record this value denotes, when it has no exponential part.
    pub fn as_gross(&self) -> Option<&GrossNumber> {
        self.terms.is_empty().then_some(&self.gross)
    }

    pub fn into_gross(self) -> Result<GrossNumber> {
        if self.terms.is_empty() {
            Ok(self.gross)
        } else {
            Err(GrossError::ExpectedGrossNumber)
        }
    }

    pub fn as_rational(&self) -> Option<ExactRational> {
        self.terms.is_empty().then(|| self.gross.as_rational()).flatten()
    }

    fn push_term(&mut self, term: ExpTerm) {
        if term.coeff.is_zero() {
            return;
        }
        let key = |t: &ExpTerm| (t.base.clone(), t.exponent.clone());
        match self
            .terms
            .binary_search_by(|probe| key(probe).cmp(&key(&term)))
        {
            Ok(i) => {
                self.terms[i].coeff += &term.coeff;
                if self.terms[i].coeff.is_zero() {
                    self.terms.remove(i);
                }
            }
            Err(i) => self.terms.insert(i, term),
        }
    }

    pub fn add(&self, rhs: &ExpValue) -> ExpValue {
        let mut out = self.clone();
        out.gross += &rhs.gross;
        for term in &rhs.terms {
            out.push_term(term.clone());
        }
        out
    }

    pub fn neg(&self) -> ExpValue {
        ExpValue {
            gross: -&self.gross,
            terms: self
                .terms
                .iter()
                .map(|t| ExpTerm {
                    coeff: -&t.coeff,
                    base: t.base.clone(),
                    exponent: t.exponent.clone(),
                })
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &ExpValue) -> ExpValue {
        self.add(&rhs.neg())
    }

    pub fn scale(&self, factor: &ExactRational) -> ExpValue {
        if factor.is_zero() {
            return ExpValue::zero();
        }
        ExpValue {
            gross: self.gross.scale(factor),
            terms: self
                .terms
                .iter()
                .map(|t| ExpTerm {
                    coeff: &t.coeff * factor,
                    base: t.base.clone(),
                    exponent: t.exponent.clone(),
                })
                .collect(),
        }
    }

    /// Exact product. Representable cross products are rational x anything,
    /// record x record, and same-base term x term (exponents add); a
    /// product that would need a mixed term such as `G * 2^G` or
    /// `2^G * 3^G` is an `UnrepresentableProduct`.
    pub fn mul(&self, rhs: &ExpValue) -> Result<ExpValue> {
        let mut out = ExpValue::from_gross(&self.gross * &rhs.gross);
        let cross = |gross: &GrossNumber, terms: &[ExpTerm], out: &mut ExpValue| -> Result<()> {
            if gross.is_zero() || terms.is_empty() {
                return Ok(());
            }
            let scalar = gross
                .as_rational()
                .ok_or(GrossError::UnrepresentableProduct)?;
            for t in terms {
                match normalize_term(&t.coeff * &scalar, t.base.clone(), t.exponent.clone())? {
                    Folded::Rational(r) => out.gross += GrossNumber::from_rational(r),
                    Folded::Term(term) => out.push_term(term),
                }
            }
            Ok(())
        };
        cross(&self.gross, &rhs.terms, &mut out)?;
        cross(&rhs.gross, &self.terms, &mut out)?;
        for t1 in &self.terms {
            for t2 in &rhs.terms {
                if t1.base != t2.base {
                    return Err(GrossError::UnrepresentableProduct);
                }
                let coeff = &t1.coeff * &t2.coeff;
                let exponent = &t1.exponent + &t2.exponent;
                match normalize_term(coeff, t1.base.clone(), exponent)? {
                    Folded::Rational(r) => out.gross += GrossNumber::from_rational(r),
                    Folded::Term(term) => out.push_term(term),
                }
            }
        }
        Ok(out)
    }

    /// Multiplicative inverse where one exists in the representation.
    pub fn recip(&self) -> Result<ExpValue> {
        if self.is_zero() {
            return Err(GrossError::DivisionByZero);
        }
        if self.terms.is_empty() {
            return Ok(ExpValue::from_gross(self.gross.recip()?));
        }
        if self.gross.is_zero() && self.terms.len() == 1 {
            let t = &self.terms[0];
            return ExpValue::exponential(t.coeff.recip()?, t.base.clone(), -&t.exponent);
        }
        Err(GrossError::NotExactlyDivisible)
    }

    /// Exact quotient for the representable divisor shapes: rationals,
    /// plain records (record dividend required) and single exponential
    /// terms.
    pub fn div(&self, rhs: &ExpValue) -> Result<ExpValue> {
        if rhs.is_zero() {
            return Err(GrossError::DivisionByZero);
        }
        if let Some(r) = rhs.as_rational() {
            return Ok(self.scale(&r.recip()?));
        }
        if let Some(divisor) = rhs.as_gross() {
            let dividend = self.as_gross().ok_or(GrossError::NotExactlyDivisible)?;
            return Ok(ExpValue::from_gross(dividend.div_exact(divisor)?));
        }
        self.mul(&rhs.recip()?)
    }

    /// Integer power; negative exponents go through `recip`.
    pub fn pow_checked(&self, exponent: &BigInt) -> Result<ExpValue> {
        if exponent.is_negative() {
            return self.recip()?.pow_checked(&-exponent);
        }
        let mut e = exponent.to_u64().ok_or(GrossError::UnsupportedExponent)?;
        let mut result = ExpValue::one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(result)
    }

    /// Sign of the value when the dominance rules decide it; `None` when
    /// the supported shapes cannot break the tie.
    fn sign(&self) -> Option<i32> {
        if self.is_zero() {
            return Some(0);
        }
        let mut infinite: Vec<&ExpTerm> = Vec::new();
        let mut infinitesimal: Vec<&ExpTerm> = Vec::new();
        for t in &self.terms {
            if t.is_infinite() {
                infinite.push(t);
            } else if t.is_infinitesimal() {
                infinitesimal.push(t);
            } else {
                // Exponent led by a non-positive grosspower (e.g. 2^(G^-1)):
                // neither dominant nor infinitesimal against records.
                return None;
            }
        }
        if let Some(dominant) = dominant_term(&infinite)? {
            return Some(dominant.coeff.signum());
        }
        if !self.gross.is_zero() {
            return Some(self.gross.signum());
        }
        let flipped: Vec<ExpTerm> = infinitesimal.iter().map(|t| t.negated_exponent()).collect();
        let refs: Vec<&ExpTerm> = flipped.iter().collect();
        // Largest infinitesimal = smallest reciprocal magnitude.
        let dominant = smallest_term(&refs)?.expect("nonzero value has terms");
        Some(dominant.coeff.signum())
    }

    /// Decide `self ? rhs` under dominance: an infinite exponential beats
    /// every record, records beat infinitesimal exponentials, and exact
    /// integer powering at a common denominator separates equal leading
    /// grosspowers. `None` is the honest "incomparable" verdict.
    pub fn compare(&self, rhs: &ExpValue) -> Option<Ordering> {
        match self.sub(rhs).sign()? {
            0 => Some(Ordering::Equal),
            s if s < 0 => Some(Ordering::Less),
            _ => Some(Ordering::Greater),
        }
    }
}

/// Strict magnitude order between two infinite-class terms.
fn magnitude_cmp(a: &ExpTerm, b: &ExpTerm) -> Option<Ordering> {
    if a.base == b.base {
        let diff = &a.exponent - &b.exponent;
        return match diff.leading() {
            None => Some(Ordering::Equal),
            Some((power, digit)) if power.is_positive() => Some(if digit.signum() > 0 {
                Ordering::Greater
            } else {
                Ordering::Less
            }),
            // The exponents differ by a finite or infinitesimal amount:
            // same asymptotic scale, no exact rational separation.
            _ => None,
        };
    }
    let (pa, ca) = a.exponent_leading();
    let (pb, cb) = b.exponent_leading();
    if pa != pb {
        return Some(pa.cmp(pb));
    }
    // Equal leading grosspower: compare base^digit at a common denominator.
    let denom_a = ca.denom();
    let denom_b = cb.denom();
    let common = denom_a.lcm(denom_b);
    let ea = ca.numer() * (&common / denom_a);
    let eb = cb.numer() * (&common / denom_b);
    let left = a.base.pow_checked(&ea).ok()?;
    let right = b.base.pow_checked(&eb).ok()?;
    match left.cmp_value(&right) {
        Ordering::Equal => None,
        other => Some(other),
    }
}

/// Extremal term under the magnitude order; outer `None` means some pair
/// was incomparable, inner `None` an empty slice.
fn extreme_term<'a>(
    terms: &[&'a ExpTerm],
    keep: impl Fn(Ordering) -> bool,
) -> Option<Option<&'a ExpTerm>> {
    let mut best: Option<&ExpTerm> = None;
    for &t in terms {
        best = Some(match best {
            None => t,
            Some(current) => {
                if keep(magnitude_cmp(t, current)?) {
                    t
                } else {
                    current
                }
            }
        });
    }
    Some(best)
}

fn dominant_term<'a>(terms: &[&'a ExpTerm]) -> Option<Option<&'a ExpTerm>> {
    extreme_term(terms, |o| o == Ordering::Greater)
}

fn smallest_term<'a>(terms: &[&'a ExpTerm]) -> Option<Option<&'a ExpTerm>> {
    extreme_term(terms, |o| o == Ordering::Less)
}

impl PartialOrd for ExpValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.compare(other)
    }
}

impl From<GrossNumber> for ExpValue {
    fn from(g: GrossNumber) -> Self {
        ExpValue::from_gross(g)
    }
}

impl fmt::Display for ExpValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::textio::format_record(self))
    }
}

/// Exact `base^exponent` for a rational base and record exponent,
/// resolving negative bases through the parity of the exponent.
pub fn pow_rational_gross(base: &ExactRational, exponent: &GrossNumber) -> Result<ExpValue> {
    if let Some(finite) = exponent.as_rational() {
        if let Some(k) = finite.to_integer() {
            return Ok(ExpValue::from_rational(base.pow_checked(&k)?));
        }
        // Fractional finite exponent: exact only when the root exists.
        let denom = finite
            .denom()
            .to_u32()
            .ok_or(GrossError::UnsupportedExponent)?;
        let root = base.exact_root(denom)?;
        return Ok(ExpValue::from_rational(root.pow_checked(finite.numer())?));
    }
    match base.signum() {
        0 => {
            // 0^E = 0 for positive E, undefined for E <= 0.
            if exponent.signum() > 0 {
                Ok(ExpValue::zero())
            } else {
                Err(GrossError::DivisionByZero)
            }
        }
        s if s > 0 => {
            if base.is_one() {
                return Ok(ExpValue::one());
            }
            ExpValue::exponential(ExactRational::one(), base.clone(), exponent.clone())
        }
        _ => {
            let parity = exponent
                .parity()
                .map_err(|_| GrossError::ParityRequired)?;
            let magnitude = pow_rational_gross(&base.abs(), exponent)?;
            Ok(match parity {
                Parity::Even => magnitude,
                Parity::Odd => magnitude.neg(),
            })
        }
    }
}
