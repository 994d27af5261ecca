//! Bessel functions of the first kind and modified Bessel functions from
//! their ascending series.

use super::gamma::gamma;
use super::SpecialError;

const EPS: f64 = 1e-17;
const MAX_TERMS: usize = 2000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BesselKind {
    J,
    I,
}

fn check_order(nu: f64) -> Result<(), SpecialError> {
    if !(nu > -1.0) || !nu.is_finite() {
        return Err(SpecialError::DomainError { function: "bessel", reason: format!("order {nu} must exceed -1") });
    }
    Ok(())
}

/// `(2/z)^nu C_nu(z) = sum (±z^2/4)^n / (n! Gamma(nu+n+1))`, entire in `z`.
pub fn bessel_scaled(kind: BesselKind, nu: f64, z: f64) -> Result<f64, SpecialError> {
    check_order(nu)?;
    let q = match kind {
        BesselKind::J => -0.25 * z * z,
        BesselKind::I => 0.25 * z * z,
    };
    let mut term = 1.0 / gamma(nu + 1.0)?;
    let mut sum = term;
    let mut largest = term.abs();
    for n in 1..MAX_TERMS {
        let nf = n as f64;
        term *= q / (nf * (nu + nf));
        sum += term;
        largest = largest.max(sum.abs());
        if term.abs() <= EPS * largest && nf * nf > q.abs() {
            break;
        }
    }
    Ok(sum)
}

/// `J_nu(z)` or `I_nu(z)` for `nu > -1`.
///
/// Negative `z` is accepted for integer orders through `C_n(-z) = (-1)^n C_n(z)`.
/// The alternating `J` series loses roughly `z/2.3` digits to cancellation, so
/// it is intended for moderate arguments (`|z| <= 20`).
pub fn bessel(kind: BesselKind, nu: f64, z: f64) -> Result<f64, SpecialError> {
    check_order(nu)?;
    if z == 0.0 {
        return if nu == 0.0 {
            Ok(1.0)
        } else if nu > 0.0 {
            Ok(0.0)
        } else {
            Err(SpecialError::DomainError { function: "bessel", reason: "negative order is unbounded at z = 0".into() })
        };
    }
    if z < 0.0 {
        if nu != nu.floor() {
            return Err(SpecialError::DomainError {
                function: "bessel",
                reason: format!("non-integer order {nu} needs z > 0"),
            });
        }
        let sign = if (nu as i64) % 2 == 0 { 1.0 } else { -1.0 };
        return Ok(sign * bessel(kind, nu, -z)?);
    }
    Ok((0.5 * z).powf(nu) * bessel_scaled(kind, nu, z)?)
}
