//! Gamma function, its logarithm, and the Stirling series.

use std::f64::consts::PI;
use std::sync::OnceLock;

use num_bigint::BigInt;

use super::bernoulli::bernoulli_number;
use super::precise::{self, Fixed};
use super::SpecialError;
use crate::exact::{self, Rational};
use crate::series::Series;

/// Arguments are shifted up to at least this value before the Stirling
/// series takes over; with four correction terms the first omitted term is
/// below 5e-17 there.
const ASYMPTOTIC_START: f64 = 30.0;
const CORRECTION_TERMS: usize = 4;
const HALF_LN_TWO_PI: f64 = 0.918_938_533_204_672_8;

fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x == x.floor()
}

/// Exact Stirling coefficient `B_{2j} / (2j (2j-1))`, `j >= 1`.
pub fn stirling_coefficient(j: usize) -> Rational {
    let two_j = 2 * j as i64;
    bernoulli_number(2 * j) / exact::int(two_j * (two_j - 1))
}

fn stirling_coefficients_f64() -> &'static [f64] {
    static C: OnceLock<Vec<f64>> = OnceLock::new();
    C.get_or_init(|| (1..=12).map(|j| exact::to_f64(&stirling_coefficient(j))).collect())
}

/// `j`-th correction term `B_{2j}/(2j(2j-1) x^(2j-1))`.
pub fn stirling_term(j: usize, x: f64) -> f64 {
    let c = if j <= 12 { stirling_coefficients_f64()[j - 1] } else { exact::to_f64(&stirling_coefficient(j)) };
    c / x.powi(2 * j as i32 - 1)
}

fn correction_sum(x: f64, terms: usize) -> f64 {
    (1..=terms).rev().map(|j| stirling_term(j, x)).sum()
}

/// `ln Gamma(x) ~ (x - 1/2) ln x - x + ln(2 pi)/2 + sum_{j<=terms} ...`
pub fn stirling_ln_gamma(x: f64, terms: usize) -> f64 {
    (x - 0.5) * x.ln() - x + HALF_LN_TWO_PI + correction_sum(x, terms)
}

/// `ln x! ~ (x + 1/2) ln x - x + ln(2 pi)/2 + sum_{j<=terms} ...`
pub fn stirling_ln_factorial(x: f64, terms: usize) -> f64 {
    (x + 0.5) * x.ln() - x + HALF_LN_TWO_PI + correction_sum(x, terms)
}

/// `n! ~ sqrt(2 pi n) (n/e)^n (1 + 1/(12n) + 1/(288n^2) - ...)`, with the
/// bracket obtained by exponentiating the correction series exactly.
pub fn stirling_factorial(x: f64, bracket_terms: usize) -> f64 {
    let coeffs = stirling_factorial_bracket(bracket_terms.max(1));
    let inv = 1.0 / x;
    let bracket = crate::series::horner(&coeffs.iter().map(exact::to_f64).collect::<Vec<_>>(), inv);
    (2.0 * PI * x).sqrt() * (x / std::f64::consts::E).powf(x) * bracket
}

/// Coefficients of `exp(sum_j c_j u^(2j-1))` in powers of `u = 1/n`.
pub fn stirling_factorial_bracket(terms: usize) -> Vec<Rational> {
    let order = terms.saturating_sub(1);
    let exponent = Series::from_fn(order, |k| {
        if k % 2 == 1 {
            stirling_coefficient(k.div_ceil(2))
        } else {
            Rational::from_integer(0.into())
        }
    });
    exponent.exp().expect("zero constant term").into_coeffs()
}

/// `Gamma(x)`, with poles at the non-positive integers.
pub fn gamma(x: f64) -> Result<f64, SpecialError> {
    if x.is_nan() || is_nonpositive_integer(x) {
        return Err(SpecialError::PoleAtNonpositiveInteger(x));
    }
    if x == x.floor() && x <= 171.0 {
        let mut acc = 1.0;
        let mut k = 2.0;
        while k < x {
            acc *= k;
            k += 1.0;
        }
        return Ok(acc);
    }
    if x < 0.5 {
        return Ok(PI / ((PI * x).sin() * gamma(1.0 - x)?));
    }
    let mut shifted = x;
    let mut product = 1.0;
    while shifted < ASYMPTOTIC_START {
        product *= shifted;
        shifted += 1.0;
    }
    // x^(x-1/2) e^(-x) split in halves so large arguments do not overflow early.
    let half_power = shifted.powf(0.5 * (shifted - 0.5));
    let core = half_power * ((-shifted).exp() * half_power);
    let value = core * (2.0 * PI).sqrt() * correction_sum(shifted, CORRECTION_TERMS).exp();
    Ok(value / product)
}

/// `ln |Gamma(x)|`.
pub fn ln_gamma(x: f64) -> Result<f64, SpecialError> {
    if x.is_nan() || is_nonpositive_integer(x) {
        return Err(SpecialError::PoleAtNonpositiveInteger(x));
    }
    if x < 0.5 {
        let s = (PI * x).sin().abs();
        return Ok(PI.ln() - s.ln() - ln_gamma(1.0 - x)?);
    }
    let mut shifted = x;
    let mut product = 1.0;
    while shifted < ASYMPTOTIC_START {
        product *= shifted;
        shifted += 1.0;
    }
    Ok(stirling_ln_gamma(shifted, CORRECTION_TERMS) - product.ln())
}

/// Generalized binomial `r(r-1)...(r-n+1)/n!` by the finite product.
pub fn binom(r: f64, n: u64) -> f64 {
    (0..n).fold(1.0, |acc, k| acc * (r - k as f64) / (k as f64 + 1.0))
}

/// Rising factorial `(z)_n = z(z+1)...(z+n-1)`; `(z)_0 = 1`.
pub fn pochhammer(z: f64, n: u64) -> f64 {
    (0..n).fold(1.0, |acc, k| acc * (z + k as f64))
}

/// `ln n! - [(n + 1/2) ln n - n + ln(2 pi)/2 + sum_{j<=terms} c_j n^(1-2j)]`,
/// evaluated with several hundred bits so tiny remainders are resolved.
pub fn stirling_remainder_ln_factorial(n: u64, terms: usize) -> f64 {
    stirling_remainder(n, terms, exact::factorial(n), exact::ratio(1, 2))
}

/// `ln (n-1)! - [(n - 1/2) ln n - n + ln(2 pi)/2 + sum_{j<=terms} c_j n^(1-2j)]`.
pub fn stirling_remainder_ln_gamma(n: u64, terms: usize) -> f64 {
    stirling_remainder(n, terms, exact::factorial(n - 1), exact::ratio(-1, 2))
}

fn stirling_remainder(n: u64, terms: usize, fact: BigInt, half: Rational) -> f64 {
    assert!(n >= 1, "Stirling remainder needs n >= 1");
    let nb = BigInt::from(n);
    let ln_n = Fixed::ln_int(&nb);
    let ln_fact = Fixed::ln_int(&fact);
    let exponent = Fixed::from_rational(&(exact::int(n as i64) + half));
    let ln_two_pi = Fixed::ln_int(&BigInt::from(2));
    let ln_two_pi = &ln_two_pi + &ln_pi();
    let leading = &(&exponent * &ln_n) - &Fixed::from_int(n as i64);
    let leading = &leading + &ln_two_pi.div_int(&BigInt::from(2));
    let mut corrections = Rational::from_integer(0.into());
    for j in 1..=terms {
        corrections += stirling_coefficient(j) / exact::pow_rational(&exact::int(n as i64), 2 * j as i64 - 1);
    }
    let truncated = &leading + &Fixed::from_rational(&corrections);
    (&ln_fact - &truncated).to_f64()
}

fn ln_pi() -> Fixed {
    precise::pi().ln()
}
