//! Partial zeta and eta sums at non-positive integer `s` with an explicit
//! (finite or infinite) item count, plus the relation and Euler-product
//! checks that the explicit counts make decidable.

use num_bigint::BigInt;

use crate::error::{GrossError, Result};
use crate::expvalue::ExpValue;
use crate::gross::{GrossNumber, Parity};
use crate::powersum::{alternating_power_sum, faulhaber};
use crate::rational::ExactRational;
use crate::series::{sum_geometric, GeomStart};

/// Upper bound on `m = -s`; closed forms above it are computable but well
/// past anything the check suites exercise.
pub const DEFAULT_MAX_ORDER: usize = 32;

/// A validated request for `zeta(s, n)` or `eta(s, n)`: `s = -m <= 0` and
/// an integer-valued count `n >= 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZetaQuery {
    s: i64,
    n: GrossNumber,
}

impl ZetaQuery {
    pub fn new(s: i64, n: GrossNumber) -> Result<Self> {
        if s > 0 || s.unsigned_abs() > DEFAULT_MAX_ORDER as u64 {
            return Err(GrossError::UnsupportedExponent);
        }
        if !n.is_integer_valued() {
            return Err(GrossError::NotIntegerValued);
        }
        if n < GrossNumber::one() {
            return Err(GrossError::InvalidCount);
        }
        Ok(ZetaQuery { s, n })
    }

    pub fn s(&self) -> i64 {
        self.s
    }

    pub fn n(&self) -> &GrossNumber {
        &self.n
    }

    fn order(&self) -> usize {
        self.s.unsigned_abs() as usize
    }
}

/// `zeta(s, n) = sum_{u=1}^{n} u^(-s)` for `s = -m`: the Faulhaber
/// polynomial for `m` instantiated at the count.
pub fn zeta(query: &ZetaQuery) -> GrossNumber {
    faulhaber(query.order()).eval_gross(&query.n)
}

/// `eta(s, n) = sum_{u=1}^{n} (-1)^(u-1) u^(-s)`, resolved through the
/// parity of the count.
pub fn eta(query: &ZetaQuery) -> Result<GrossNumber> {
    alternating_power_sum(query.order(), &query.n)
}

/// Checks `eta(s, n) = zeta(s, n) - 2^(1-s) zeta(s, k)` where `k` counts
/// the even items: `n = 2k` or `n = 2k + 1`. Exact verdict.
pub fn relation_check(s: i64, n: &GrossNumber) -> Result<bool> {
    let query = ZetaQuery::new(s, n.clone())?;
    let half = match n.parity()? {
        Parity::Even => n.div_rational(&ExactRational::from_integer(2))?,
        Parity::Odd => (n - &GrossNumber::one()).div_rational(&ExactRational::from_integer(2))?,
    };
    let lhs = eta(&query)?;
    let two_pow = ExactRational::from_integer(2).pow_checked(&BigInt::from(1 - s))?;
    let rhs = if half.is_zero() {
        // n = 1: no even items to remove.
        zeta(&query)
    } else {
        let half_query = ZetaQuery::new(s, half)?;
        &zeta(&query) - &zeta(&half_query).scale(&two_pow)
    };
    Ok(lhs == rhs)
}

/// Truncated Euler factor `1 + p^-s + ... + p^(-s(k-1))
/// = (1 - p^(-sk)) / (1 - p^-s)` over an explicit count `k`; a plain
/// rational for finite `k`, and an exact exponential tail otherwise.
pub fn euler_factor_partial(p: u64, s: i64, k: &GrossNumber) -> Result<ExpValue> {
    if s == 0 {
        return Err(GrossError::UnsupportedExponent);
    }
    if !k.is_integer_valued() {
        return Err(GrossError::NotIntegerValued);
    }
    if k < &GrossNumber::one() {
        return Err(GrossError::InvalidCount);
    }
    if k.as_rational().is_none() && s < 0 {
        // The tail p^(-sk) would be an infinite term, not a truncation
        // defect that vanishes; reject rather than misreport.
        return Err(GrossError::UnsupportedExponent);
    }
    let ratio = ExactRational::from_integer(p).pow_checked(&BigInt::from(-s))?;
    sum_geometric(&ratio, &(k - &GrossNumber::one()), GeomStart::FromZero)
}

/// The first `r` primes.
pub fn first_primes(r: usize) -> Vec<u64> {
    let mut primes = Vec::with_capacity(r);
    let mut candidate = 2u64;
    while primes.len() < r {
        if primes.iter().all(|p| !candidate.is_multiple_of(*p)) {
            primes.push(candidate);
        }
        candidate += 1;
    }
    primes
}

/// Desk-scale shadow of the sum/product inequality: compares
/// `sum_{u=1}^{n} u^-s` with the product of truncated Euler factors over
/// the first `depths.len()` primes, and each truncated factor with its
/// untruncated value `1/(1 - p^-s)`. Returns `true` when every comparison
/// comes out unequal, exactly.
pub fn euler_inequality_check(s: u32, n: u64, depths: &[u32]) -> Result<bool> {
    if s == 0 || n == 0 || depths.is_empty() || depths.contains(&0) {
        return Err(GrossError::InvalidCount);
    }
    let mut partial_sum = ExactRational::zero();
    for u in 1..=n {
        partial_sum += ExactRational::from_integer(u)
            .pow_checked(&BigInt::from(s))?
            .recip()?;
    }
    let primes = first_primes(depths.len());
    let mut product = ExactRational::one();
    for (&p, &depth) in primes.iter().zip(depths) {
        let factor = euler_factor_partial(p, s as i64, &GrossNumber::from_integer(depth as i64))?
            .as_rational()
            .expect("finite truncation is rational");
        let untruncated = (ExactRational::one()
            - ExactRational::from_integer(p).pow_checked(&BigInt::from(s))?.recip()?)
        .recip()?;
        if factor == untruncated {
            return Ok(false);
        }
        product *= factor;
    }
    Ok(partial_sum != product)
}
