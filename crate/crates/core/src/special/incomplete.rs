//! Incomplete gamma functions and the error function.

use std::f64::consts::PI;

use super::gamma::gamma;
use super::SpecialError;

const MAX_TERMS: usize = 5000;
const EPS: f64 = 1e-17;

fn check_a(a: f64) -> Result<(), SpecialError> {
    if !a.is_finite() || (a <= 0.0 && a == a.floor()) {
        return Err(SpecialError::DomainError {
            function: "incomplete gamma",
            reason: format!("a = {a} must not be a non-positive integer"),
        });
    }
    Ok(())
}

/// `gamma*(a, x) = e^(-x) sum_n x^n / Gamma(a+n+1)`, entire in `x`.
pub fn gamma_star(a: f64, x: f64) -> Result<f64, SpecialError> {
    check_a(a)?;
    let mut term = 1.0 / gamma(a + 1.0)?;
    let mut sum = term;
    for n in 1..MAX_TERMS {
        term *= x / (a + n as f64);
        sum += term;
        if term.abs() <= EPS * sum.abs() && n as f64 > x.abs() {
            break;
        }
    }
    Ok((-x).exp() * sum)
}

/// The alternating form `(1/Gamma(a)) sum_n (-1)^n x^n / ((a+n) n!)`.
/// Loses digits to cancellation once `x` is large; meant for moderate `x`.
pub fn gamma_star_alternating(a: f64, x: f64) -> Result<f64, SpecialError> {
    check_a(a)?;
    let mut power = 1.0;
    let mut sum = 1.0 / a;
    for n in 1..MAX_TERMS {
        power *= -x / n as f64;
        let term = power / (a + n as f64);
        sum += term;
        if term.abs() <= EPS * sum.abs() && n as f64 > x.abs() {
            break;
        }
    }
    Ok(sum / gamma(a)?)
}

/// Upper incomplete gamma `Gamma(a, x) = int_x^inf t^(a-1) e^(-t) dt`, `x >= 0`.
pub fn upper_gamma(a: f64, x: f64) -> Result<f64, SpecialError> {
    check_a(a)?;
    if x < 0.0 || x.is_nan() {
        return Err(SpecialError::DomainError { function: "upper_gamma", reason: format!("x = {x} must be >= 0") });
    }
    if x < a + 1.0 {
        let g = gamma(a)?;
        return Ok(g * (1.0 - x.powf(a) * gamma_star(a, x)?));
    }
    Ok(upper_gamma_continued_fraction(a, x))
}

/// Legendre continued fraction, modified Lentz evaluation.
fn upper_gamma_continued_fraction(a: f64, x: f64) -> f64 {
    const TINY: f64 = 1e-300;
    let mut b = x + 1.0 - a;
    let mut c = 1.0 / TINY;
    let mut d = 1.0 / b;
    let mut h = d;
    for i in 1..MAX_TERMS {
        let an = -(i as f64) * (i as f64 - a);
        b += 2.0;
        d = an * d + b;
        if d.abs() < TINY {
            d = TINY;
        }
        c = b + an / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        let delta = d * c;
        h *= delta;
        if (delta - 1.0).abs() < 1e-16 {
            break;
        }
    }
    (-x + a * x.ln()).exp() * h
}

/// Error function from `e^(-x^2) sum 2^(2n) n! x^(2n+1) / (2n+1)!`, whose
/// terms are all positive. Odd by construction and clamped to `[-1, 1]`.
pub fn erf(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    let ax = x.abs();
    let value = if ax >= 6.0 {
        1.0
    } else {
        let x2 = ax * ax;
        let mut term = ax;
        let mut sum = ax;
        for n in 1..MAX_TERMS {
            term *= 2.0 * x2 / (2 * n + 1) as f64;
            sum += term;
            if term <= EPS * sum {
                break;
            }
        }
        (2.0 / PI.sqrt() * (-x2).exp() * sum).min(1.0)
    };
    value.copysign(x)
}

/// The alternating erf series `(2/sqrt(pi)) sum (-1)^n x^(2n+1) / ((2n+1) n!)`.
pub fn erf_alternating(x: f64) -> f64 {
    let x2 = x * x;
    let mut power = x;
    let mut sum = x;
    for n in 1..MAX_TERMS {
        power *= -x2 / n as f64;
        let term = power / (2 * n + 1) as f64;
        sum += term;
        if term.abs() <= EPS * sum.abs() && n as f64 > x2 {
            break;
        }
    }
    2.0 / PI.sqrt() * sum
}
