//! Exponential, sine and cosine integrals.
//!
//! Each is the power series `sum (±1)^n z^n / (n n!)` or its odd/even
//! analogue, plus the `gamma + ln z` term where the function has one. Large
//! arguments switch to continued fractions.

use std::f64::consts::FRAC_PI_2;

use num_complex::Complex64;

use super::constants::euler_gamma;
use super::SpecialError;

const EPS: f64 = 1e-17;
const MAX_TERMS: usize = 5000;
/// `E_1` uses the alternating series up to here, then the continued fraction.
const E1_SERIES_LIMIT: f64 = 5.0;
/// `Si`/`Ci` use their alternating series up to here.
const TRIG_SERIES_LIMIT: f64 = 8.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExpIntKind {
    Ei,
    E1,
    En(u32),
    Si,
    Ci,
    Shi,
    Chi,
}

pub fn exp_integral(kind: ExpIntKind, z: f64) -> Result<f64, SpecialError> {
    match kind {
        ExpIntKind::Ei => ei(z),
        ExpIntKind::E1 => e1(z),
        ExpIntKind::En(n) => en(n, z),
        ExpIntKind::Si => Ok(si(z)),
        ExpIntKind::Ci => ci(z),
        ExpIntKind::Shi => Ok(shi(z)),
        ExpIntKind::Chi => chi(z),
    }
}

fn positive(function: &'static str, z: f64) -> Result<(), SpecialError> {
    if z > 0.0 && z.is_finite() {
        Ok(())
    } else {
        Err(SpecialError::DomainError { function, reason: format!("argument {z} must be positive and finite") })
    }
}

/// `sum_{n>=1} (sign z)^n / (n n!)` for `sign = ±1`.
pub fn ein_series(z: f64, sign: f64) -> f64 {
    let mut power = 1.0;
    let mut sum = 0.0;
    for n in 1..MAX_TERMS {
        power *= sign * z / n as f64;
        let term = power / n as f64;
        sum += term;
        if term.abs() <= EPS * sum.abs() && n as f64 > z.abs() {
            break;
        }
    }
    sum
}

/// `sum (sign)^n z^(2n+1) / ((2n+1)(2n+1)!)`.
pub fn odd_integral_series(z: f64, sign: f64) -> f64 {
    let z2 = z * z;
    let mut power = z;
    let mut sum = z;
    for n in 1..MAX_TERMS {
        let k = 2 * n as u64;
        power *= sign * z2 / (k as f64 * (k + 1) as f64);
        let term = power / (k + 1) as f64;
        sum += term;
        if term.abs() <= EPS * sum.abs() && k as f64 > z.abs() {
            break;
        }
    }
    sum
}

/// `sum_{n>=1} (sign)^n z^(2n) / (2n (2n)!)`.
pub fn even_integral_series(z: f64, sign: f64) -> f64 {
    let z2 = z * z;
    let mut power = 1.0;
    let mut sum = 0.0;
    for n in 1..MAX_TERMS {
        let k = 2 * n as u64;
        power *= sign * z2 / ((k - 1) as f64 * k as f64);
        let term = power / k as f64;
        sum += term;
        if term.abs() <= EPS * sum.abs() && k as f64 > z.abs() {
            break;
        }
    }
    sum
}

/// `Ei(z) = gamma + ln z + sum z^n/(n n!)`, `z > 0`.
pub fn ei(z: f64) -> Result<f64, SpecialError> {
    positive("Ei", z)?;
    Ok(euler_gamma() + z.ln() + ein_series(z, 1.0))
}

/// `E_1(z) = -gamma - ln z - sum (-z)^n/(n n!)`, `z > 0`.
pub fn e1(z: f64) -> Result<f64, SpecialError> {
    positive("E1", z)?;
    if z <= E1_SERIES_LIMIT {
        Ok(-euler_gamma() - z.ln() - ein_series(z, -1.0))
    } else {
        Ok(en_continued_fraction(1, z))
    }
}

/// `E_n(z) = int_1^inf e^(-zt) t^(-n) dt`.
pub fn en(n: u32, z: f64) -> Result<f64, SpecialError> {
    if n == 0 {
        positive("E0", z)?;
        return Ok((-z).exp() / z);
    }
    if z == 0.0 && n > 1 {
        return Ok(1.0 / (n - 1) as f64);
    }
    positive("En", z)?;
    if n == 1 {
        return e1(z);
    }
    if z <= 1.0 {
        // Upward recurrence E_{k+1} = (e^-z - z E_k)/k is stable for small z.
        let mut value = e1(z)?;
        let ez = (-z).exp();
        for k in 1..n {
            value = (ez - z * value) / k as f64;
        }
        Ok(value)
    } else {
        Ok(en_continued_fraction(n, z))
    }
}

fn en_continued_fraction(n: u32, z: f64) -> f64 {
    const TINY: f64 = 1e-300;
    let nm1 = n as f64 - 1.0;
    let mut b = z + n as f64;
    let mut c = 1.0 / TINY;
    let mut d = 1.0 / b;
    let mut h = d;
    for i in 1..MAX_TERMS {
        let a = -(i as f64) * (nm1 + i as f64);
        b += 2.0;
        d = 1.0 / (a * d + b);
        c = b + a / c;
        let delta = c * d;
        h *= delta;
        if (delta - 1.0).abs() < 1e-16 {
            break;
        }
    }
    h * (-z).exp()
}

/// `Si(z) = sum (-1)^n z^(2n+1)/((2n+1)(2n+1)!)`, odd.
pub fn si(z: f64) -> f64 {
    let az = z.abs();
    let value = if az <= TRIG_SERIES_LIMIT { odd_integral_series(az, -1.0) } else { cisi_continued_fraction(az).1 };
    value.copysign(z)
}

/// `Ci(z) = gamma + ln z + sum_{n>=1} (-1)^n z^(2n)/(2n (2n)!)`, `z > 0`.
pub fn ci(z: f64) -> Result<f64, SpecialError> {
    positive("Ci", z)?;
    if z <= TRIG_SERIES_LIMIT {
        Ok(euler_gamma() + z.ln() + even_integral_series(z, -1.0))
    } else {
        Ok(cisi_continued_fraction(z).0)
    }
}

/// `Shi(z) = sum z^(2n+1)/((2n+1)(2n+1)!)`, odd.
pub fn shi(z: f64) -> f64 {
    odd_integral_series(z.abs(), 1.0).copysign(z)
}

/// `Chi(z) = gamma + ln z + sum_{n>=1} z^(2n)/(2n (2n)!)`, `z > 0`.
pub fn chi(z: f64) -> Result<f64, SpecialError> {
    positive("Chi", z)?;
    Ok(euler_gamma() + z.ln() + even_integral_series(z, 1.0))
}

/// `(Ci(t), Si(t))` from the continued fraction for `E_1(it)`, `t > 2`.
fn cisi_continued_fraction(t: f64) -> (f64, f64) {
    let tiny = 1e-300;
    let mut b = Complex64::new(1.0, t);
    let mut c = Complex64::new(1.0 / tiny, 0.0);
    let mut d = Complex64::new(1.0, 0.0) / b;
    let mut h = d;
    for i in 2..MAX_TERMS {
        let a = -((i - 1) as f64).powi(2);
        b += Complex64::new(2.0, 0.0);
        d = Complex64::new(1.0, 0.0) / (d * a + b);
        c = b + Complex64::new(a, 0.0) / c;
        let delta = c * d;
        h *= delta;
        if (delta.re - 1.0).abs() + delta.im.abs() < 1e-16 {
            break;
        }
    }
    h *= Complex64::new(t.cos(), -t.sin());
    (-h.re, FRAC_PI_2 + h.im)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn si_at_zero() {
        assert_eq!(si(0.0), 0.0);
        assert_eq!(shi(0.0), 0.0);
    }

    #[test]
    fn ei_minus_gamma_at_one() {
        // 30-term partial sum of 1/(n n!)
        let mut s = 0.0;
        let mut fact = 1.0;
        for n in 1..=30 {
            fact *= n as f64;
            s += 1.0 / (n as f64 * fact);
        }
        assert!((s - 1.317_902_151_454_404).abs() < 1e-15);
        assert!((ei(1.0).unwrap() - euler_gamma() - s).abs() < 1e-15);
    }

    #[test]
    fn reference_values() {
        // Tabulated values.
        let cases: [(f64, f64, f64); 4] = [
            (e1(1.0).unwrap(), 0.219_383_934_395_520_3, 1e-15),
            (e1(10.0).unwrap(), 4.156_968_929_685_324e-6, 1e-19),
            (si(1.0), 0.946_083_070_367_183_1, 1e-15),
            (si(20.0), 1.548_241_701_043_439_7, 1e-14),
        ];
        for (got, want, tol) in cases {
            assert!((got - want).abs() < tol, "{got} vs {want}");
        }
        assert!((ci(1.0).unwrap() - 0.337_403_922_900_968_1).abs() < 1e-15);
        assert!((ci(20.0).unwrap() - 0.044_419_820_845_353_3).abs() < 1e-14);
        assert!((chi(1.0).unwrap() - 0.837_866_940_980_208_2).abs() < 1e-15);
        assert!((shi(1.0) - 1.057_250_875_375_728_5).abs() < 1e-15);
    }

    #[test]
    fn series_and_fraction_agree_at_the_switch() {
        let below = -euler_gamma() - 5.0f64.ln() - ein_series(5.0, -1.0);
        assert!((below - en_continued_fraction(1, 5.0)).abs() < 1e-14);
        let z = TRIG_SERIES_LIMIT;
        let (c, s) = cisi_continued_fraction(z);
        assert!((c - (euler_gamma() + z.ln() + even_integral_series(z, -1.0))).abs() < 1e-13);
        assert!((s - odd_integral_series(z, -1.0)).abs() < 1e-13);
    }

    #[test]
    fn en_recurrence_and_fraction() {
        // E_2(z) = e^-z - z E_1(z)
        for z in [0.3, 0.9, 1.5, 4.0] {
            let direct = en(2, z).unwrap();
            let rec = (-z).exp() - z * e1(z).unwrap();
            assert!((direct - rec).abs() < 1e-14, "z = {z}");
        }
        assert_eq!(en(3, 0.0).unwrap(), 0.5);
    }

    #[test]
    fn domains() {
        assert!(ei(0.0).is_err());
        assert!(e1(-1.0).is_err());
        assert!(ci(0.0).is_err());
        assert!(chi(-2.0).is_err());
        assert_eq!(si(-1.5), -si(1.5));
    }
}
