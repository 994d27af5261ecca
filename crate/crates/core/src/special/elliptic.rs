//! Complete elliptic integrals of the first and second kind, parameter `m`.

use std::f64::consts::FRAC_PI_2;

use super::SpecialError;

/// Above this parameter the hypergeometric series converges too slowly and
/// the arithmetic-geometric mean is used instead.
pub const SERIES_LIMIT: f64 = 0.95;
const EPS: f64 = 1e-17;
const MAX_TERMS: usize = 20_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EllipticKind {
    K,
    E,
}

fn check(m: f64) -> Result<(), SpecialError> {
    if (0.0..1.0).contains(&m) {
        Ok(())
    } else {
        Err(SpecialError::DomainError { function: "elliptic", reason: format!("parameter {m} outside [0, 1)") })
    }
}

/// `K(m)` or `E(m)` for `0 <= m < 1`.
pub fn elliptic(kind: EllipticKind, m: f64) -> Result<f64, SpecialError> {
    check(m)?;
    if m <= SERIES_LIMIT {
        elliptic_series(kind, m)
    } else {
        elliptic_agm(kind, m)
    }
}

/// `K = (pi/2) sum [C(2n,n)/2^(2n)]^2 m^n` and
/// `E = (pi/2) [1 - sum_{n>=1} [C(2n,n)/2^(2n)]^2 m^n / (2n-1)]`.
pub fn elliptic_series(kind: EllipticKind, m: f64) -> Result<f64, SpecialError> {
    check(m)?;
    let mut c = 1.0;
    let mut power = 1.0;
    let mut sum = match kind {
        EllipticKind::K => 1.0,
        EllipticKind::E => 0.0,
    };
    for n in 1..MAX_TERMS {
        let ratio = (2 * n - 1) as f64 / (2 * n) as f64;
        c *= ratio * ratio;
        power *= m;
        let term = match kind {
            EllipticKind::K => c * power,
            EllipticKind::E => c * power / (2 * n - 1) as f64,
        };
        sum += term;
        if term <= EPS * sum.max(1e-300) {
            break;
        }
    }
    Ok(match kind {
        EllipticKind::K => FRAC_PI_2 * sum,
        EllipticKind::E => FRAC_PI_2 * (1.0 - sum),
    })
}

/// Arithmetic-geometric mean evaluation, accurate up to `m` close to one.
pub fn elliptic_agm(kind: EllipticKind, m: f64) -> Result<f64, SpecialError> {
    check(m)?;
    let mut a = 1.0;
    let mut b = (1.0 - m).sqrt();
    let mut c = m.sqrt();
    let mut weight = 0.5;
    let mut deficit = weight * c * c;
    for _ in 0..64 {
        if c.abs() <= EPS * a {
            break;
        }
        let next_a = 0.5 * (a + b);
        // c_{n+1} = (a_n - b_n)/2 = c_n^2 / (4 a_{n+1}), without the cancellation.
        c = c * c / (4.0 * next_a);
        b = (a * b).sqrt();
        a = next_a;
        weight *= 2.0;
        deficit += weight * c * c;
    }
    let k = FRAC_PI_2 / a;
    Ok(match kind {
        EllipticKind::K => k,
        EllipticKind::E => k * (1.0 - deficit),
    })
}
