//! Taylor versus root-product polynomial approximations of sin(x):
//! exact coefficients, degree-by-degree mismatch detection, and numeric
//! curve emission.
//!
//! Coefficients of the product polynomial carry explicit powers of pi, so
//! the comparison with the pi-free Taylor coefficients is symbolic; floats
//! appear only in curve emission and in the reported numeric gaps.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::error::{GrossError, Result};
use crate::poly::factorial;
use crate::rational::ExactRational;

/// A coefficient `rational * pi^pi_power` with an even (possibly negative)
/// power of pi.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiCoefficient {
    pub rational: ExactRational,
    pub pi_power: i64,
}

impl PiCoefficient {
    pub fn new(rational: ExactRational, pi_power: i64) -> Self {
        debug_assert!(pi_power % 2 == 0, "pi powers come in even steps");
        let pi_power = if rational.is_zero() { 0 } else { pi_power };
        PiCoefficient { rational, pi_power }
    }

    pub fn is_zero(&self) -> bool {
        self.rational.is_zero()
    }

    pub fn to_f64(&self) -> f64 {
        self.rational.to_f64() * std::f64::consts::PI.powi(self.pi_power as i32)
    }
}

/// Taylor coefficients of `P1(x, 2k+1)`: degree `2j+1` carries
/// `(-1)^j / (2j+1)!`, even degrees are absent.
pub fn p1_coeffs(k: u32) -> BTreeMap<usize, ExactRational> {
    let mut out = BTreeMap::new();
    for j in 0..=k as u64 {
        let mut c = ExactRational::one()
            .checked_div(&ExactRational::from_integer(factorial(2 * j + 1)))
            .expect("factorial is positive");
        if j % 2 == 1 {
            c = -c;
        }
        out.insert((2 * j + 1) as usize, c);
    }
    out
}

/// Elementary symmetric polynomials `e_j(1, 1/2^2, ..., 1/n^2)` for
/// `j = 0..=n`, computed exactly by incremental products.
pub fn elementary_symmetric_inverse_squares(n: u32) -> Vec<ExactRational> {
    let mut e = vec![ExactRational::one()];
    for i in 1..=n as i64 {
        let inv_sq = ExactRational::ratio(1, i * i);
        e.push(ExactRational::zero());
        for j in (1..e.len()).rev() {
            let bump = &e[j - 1] * &inv_sq;
            e[j] += bump;
        }
    }
    e
}

/// Coefficients of the product polynomial `P2(x, 2n+1)
/// = x (1 - x^2/pi^2)(1 - x^2/(2^2 pi^2)) ... (1 - x^2/(n^2 pi^2))`:
/// degree `2j+1` carries `(-1)^j e_j(1, 1/4, ..., 1/n^2) pi^(-2j)`.
pub fn p2_coeffs(n: u32) -> BTreeMap<usize, PiCoefficient> {
    let mut out = BTreeMap::new();
    for (j, e) in elementary_symmetric_inverse_squares(n).into_iter().enumerate() {
        let rational = if j % 2 == 1 { -e } else { e };
        out.insert(2 * j + 1, PiCoefficient::new(rational, -2 * j as i64));
    }
    out
}

/// One degree where the two polynomials provably disagree: a pi-free
/// rational on the Taylor side against a strictly negative pi power on
/// the product side. Equality would need pi^2 to be rational.
#[derive(Clone, Debug)]
pub struct CoeffMismatch {
    pub degree: usize,
    pub taylor: ExactRational,
    pub product: PiCoefficient,
}

/// The degree-3 disagreement: equality would force the truncated
/// inverse-square sum to reach pi^2/6, impossible for a strict partial sum.
#[derive(Clone, Debug)]
pub struct Degree3Mismatch {
    /// `sum_{i=1}^{k} 1/i^2`, exact.
    pub partial_inverse_square_sum: ExactRational,
    /// `pi^2/6 - sum`, binary64; strictly positive for every finite k.
    pub numeric_gap: f64,
}

/// The top-degree disagreement: equality would force
/// `pi^(2k)/(2k+1)! = 1/(k!)^2`.
#[derive(Clone, Debug)]
pub struct TopDegreeMismatch {
    pub taylor: ExactRational,
    pub product: PiCoefficient,
    /// Exact lower bound witness: `r - 1 > 0` where
    /// `r = pi_lo^(2k) (k!)^2 / (2k+1)!` with a rational `pi_lo < pi`.
    pub ratio_minus_one_lower_bound: ExactRational,
    /// `|pi^(2k)/(2k+1)! - 1/(k!)^2|`, binary64.
    pub numeric_gap: f64,
}

/// Full comparison of `P1(x, 2k+1)` and `P2(x, 2k+1)`; non-empty for
/// every `k >= 1`.
#[derive(Clone, Debug)]
pub struct MismatchReport {
    pub k: u32,
    pub entries: Vec<CoeffMismatch>,
    pub degree3: Degree3Mismatch,
    pub top_degree: TopDegreeMismatch,
}

impl MismatchReport {
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Rational lower bound on pi, tight to 16 decimal digits.
fn pi_lower_bound() -> ExactRational {
    ExactRational::new(
        BigInt::from(3141592653589793i64),
        BigInt::from(1000000000000000i64),
    )
    .expect("positive denominator")
}

pub fn coeff_mismatch(k: u32) -> Result<MismatchReport> {
    if k == 0 {
        return Err(GrossError::InvalidCount);
    }
    let taylor = p1_coeffs(k);
    let product = p2_coeffs(k);
    let mut entries = Vec::new();
    for j in 1..=k as usize {
        let degree = 2 * j + 1;
        let t = taylor[&degree].clone();
        let p = product[&degree].clone();
        debug_assert!(!t.is_zero() && !p.is_zero() && p.pi_power < 0);
        entries.push(CoeffMismatch {
            degree,
            taylor: t,
            product: p,
        });
    }

    let mut partial = ExactRational::zero();
    for i in 1..=k as i64 {
        partial += ExactRational::ratio(1, i * i);
    }
    let degree3 = Degree3Mismatch {
        numeric_gap: std::f64::consts::PI.powi(2) / 6.0 - partial.to_f64(),
        partial_inverse_square_sum: partial,
    };

    let k_factorial = ExactRational::from_integer(factorial(k as u64));
    let odd_factorial = ExactRational::from_integer(factorial(2 * k as u64 + 1));
    let taylor_top = ExactRational::one().checked_div(&odd_factorial)?;
    let taylor_top = if k % 2 == 1 { -taylor_top } else { taylor_top };
    let product_top_rational = ExactRational::one().checked_div(&(&k_factorial * &k_factorial))?;
    let product_top = PiCoefficient::new(
        if k % 2 == 1 {
            -product_top_rational.clone()
        } else {
            product_top_rational.clone()
        },
        -2 * k as i64,
    );
    // r = pi_lo^(2k) (k!)^2 / (2k+1)! exceeds 1 for every k >= 1, which
    // certifies pi^(2k)/(2k+1)! > 1/(k!)^2 without floating point.
    let ratio = pi_lower_bound().pow_checked(&BigInt::from(2 * k))?
        * (&k_factorial * &k_factorial)
        * odd_factorial.recip()?;
    let pi = std::f64::consts::PI;
    let numeric_gap =
        (pi.powi(2 * k as i32) / odd_factorial.to_f64() - product_top_rational.to_f64()).abs();
    let top_degree = TopDegreeMismatch {
        taylor: taylor_top,
        product: product_top,
        ratio_minus_one_lower_bound: ratio - ExactRational::one(),
        numeric_gap,
    };

    Ok(MismatchReport {
        k,
        entries,
        degree3,
        top_degree,
    })
}

/// Horner evaluation of the Taylor polynomial in binary64.
pub fn eval_p1(k: u32, x: f64) -> f64 {
    let coeffs = p1_coeffs(k);
    let top = 2 * k as usize + 1;
    let mut acc = 0.0;
    for degree in (0..=top).rev() {
        acc *= x;
        if let Some(c) = coeffs.get(&degree) {
            acc += c.to_f64();
        }
    }
    acc
}

/// Product-form evaluation of the root polynomial in binary64; the factor
/// `(1 - x^2/pi^2)` vanishes exactly at the binary64 pi.
pub fn eval_p2(k: u32, x: f64) -> f64 {
    let pi = std::f64::consts::PI;
    let mut acc = x;
    for i in 1..=k as i32 {
        let root = i as f64 * pi;
        acc *= 1.0 - (x * x) / (root * root);
    }
    acc
}

/// One sample row of the comparison curve.
#[derive(Clone, Copy, Debug)]
pub struct CurveRow {
    pub x: f64,
    pub sin: f64,
    pub p1: f64,
    pub p2: f64,
}

/// Evenly spaced samples of sin(x) and both approximations.
pub fn emit_curve(k: u32, x_min: f64, x_max: f64, steps: u32) -> Result<Vec<CurveRow>> {
    if steps < 2 {
        return Err(GrossError::InvalidCount);
    }
    let width = (x_max - x_min) / (steps - 1) as f64;
    Ok((0..steps)
        .map(|i| {
            let x = x_min + i as f64 * width;
            CurveRow {
                x,
                sin: x.sin(),
                p1: eval_p1(k, x),
                p2: eval_p2(k, x),
            }
        })
        .collect())
}

/// CSV rendering: header `x,sin,p1,p2`, one row per sample, newline
/// terminated.
pub fn curve_to_csv(rows: &[CurveRow]) -> String {
    let mut out = String::from("x,sin,p1,p2\n");
    for row in rows {
        out.push_str(&format!("{},{},{},{}\n", row.x, row.sin, row.p1, row.p2));
    }
    out
}
