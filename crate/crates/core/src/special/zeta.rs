//! Riemann zeta function and the polylogarithm `g_s(z) = sum z^n / n^s`.

use std::f64::consts::PI;

use super::bernoulli::{bernoulli_number, BernoulliTable};
use super::gamma::gamma;
use super::SpecialError;
use crate::exact;

/// Terms summed directly before the Euler–Maclaurin tail.
const EM_CUTOFF: usize = 10;
const EM_TERMS: usize = 12;
/// Direct polylog summation is used for `z` up to here; the small-alpha
/// expansion takes over above.
pub const POLYLOG_CROSSOVER: f64 = 0.5;
/// Terms of the small-alpha expansion (it also stops once terms are negligible).
const EXPANSION_TERMS: usize = 30;
const EPS: f64 = 1e-17;

fn em_coefficients() -> &'static [f64] {
    static C: std::sync::OnceLock<Vec<f64>> = std::sync::OnceLock::new();
    C.get_or_init(|| {
        let table = BernoulliTable::shared();
        (1..=EM_TERMS)
            .map(|k| exact::to_f64(&(table.bernoulli(2 * k) / exact::factorial_rational(2 * k as u64))))
            .collect()
    })
}

/// Euler–Maclaurin evaluation for real `s > 0`, `s != 1`.
fn zeta_euler_maclaurin(s: f64) -> f64 {
    let n = EM_CUTOFF as f64;
    let head: f64 = (1..EM_CUTOFF).rev().map(|k| (k as f64).powf(-s)).sum();
    let n_pow = n.powf(-s);
    let mut total = head + n * n_pow / (s - 1.0) + 0.5 * n_pow;
    // rising = s (s+1) ... (s+2k-2), power = N^(-s-2k+1)
    let mut rising = s;
    let mut power = n_pow / n;
    for (k, c) in em_coefficients().iter().enumerate() {
        if k > 0 {
            let j = (2 * k) as f64;
            rising *= (s + j - 1.0) * (s + j);
            power /= n * n;
        }
        total += c * rising * power;
    }
    total
}

/// `zeta(s)` for real `s != 1`.
pub fn zeta(s: f64) -> Result<f64, SpecialError> {
    if s == 1.0 {
        return Err(SpecialError::PoleAtOne);
    }
    if s.is_nan() {
        return Err(SpecialError::DomainError { function: "zeta", reason: "NaN argument".into() });
    }
    if s == 0.0 {
        return Ok(-0.5);
    }
    if s < 0.0 && s == s.floor() {
        // zeta(-n) = -B_{n+1}/(n+1)
        let n = (-s) as usize;
        return Ok(-exact::to_f64(&bernoulli_number(n + 1)) / (n + 1) as f64);
    }
    if s < 0.0 {
        let reflected = zeta(1.0 - s)?;
        return Ok(2f64.powf(s) * PI.powf(s - 1.0) * (0.5 * PI * s).sin() * gamma(1.0 - s)? * reflected);
    }
    if s > 60.0 {
        return Ok(1.0 + 2f64.powf(-s) + 3f64.powf(-s));
    }
    Ok(zeta_euler_maclaurin(s))
}

fn polylog_domain(z: f64) -> Result<(), SpecialError> {
    if (-1.0..=1.0).contains(&z) {
        Ok(())
    } else {
        Err(SpecialError::DomainError { function: "polylog", reason: format!("argument {z} outside [-1, 1]") })
    }
}

/// `g_s(z)` for `-1 <= z <= 1`: direct summation for `z <= 0.5`, the
/// small-alpha expansion above, and `zeta(s)` at `z = 1`.
pub fn polylog(s: f64, z: f64) -> Result<f64, SpecialError> {
    polylog_domain(z)?;
    if z == 1.0 {
        return if s > 1.0 { zeta(s) } else { Err(SpecialError::PoleAtOne) };
    }
    if z <= POLYLOG_CROSSOVER {
        polylog_direct(s, z)
    } else {
        polylog_expansion(s, z)
    }
}

/// Direct summation of `sum z^n / n^s`. At `z = -1` the alternating zeta
/// relation `-(1 - 2^(1-s)) zeta(s)` is used instead of the slow series.
pub fn polylog_direct(s: f64, z: f64) -> Result<f64, SpecialError> {
    polylog_domain(z)?;
    if z == 1.0 {
        return if s > 1.0 { zeta(s) } else { Err(SpecialError::PoleAtOne) };
    }
    if z == -1.0 {
        return if s == 1.0 { Ok(-std::f64::consts::LN_2) } else { Ok(-(1.0 - 2f64.powf(1.0 - s)) * zeta(s)?) };
    }
    let mut power = 1.0;
    let mut sum = 0.0;
    for n in 1..10_000_000u64 {
        power *= z;
        let term = power * (n as f64).powf(-s);
        sum += term;
        if term.abs() <= EPS * sum.abs() || power == 0.0 {
            break;
        }
    }
    Ok(sum)
}

/// Expansion in `alpha = -ln z`, valid for `0 < alpha < 2 pi`:
/// `Gamma(1-s) alpha^(s-1) + sum_k zeta(s-k) (-alpha)^k / k!` for non-integer
/// `s` (and `s <= 0`), with the logarithmic harmonic-number form replacing the
/// `k = s-1` term for `s = 1, 2, 3, ...`.
pub fn polylog_expansion(s: f64, z: f64) -> Result<f64, SpecialError> {
    let alpha = -z.ln();
    if !(alpha > 0.0 && alpha < 2.0 * PI) {
        return Err(SpecialError::DomainError {
            function: "polylog_expansion",
            reason: format!("alpha = {alpha} outside (0, 2 pi)"),
        });
    }
    let positive_integer = s >= 1.0 && s == s.floor();
    let skip = if positive_integer { Some(s as usize - 1) } else { None };
    let mut total = match skip {
        Some(n1) => {
            let harmonic: f64 = (1..=n1).map(|m| 1.0 / m as f64).sum();
            let mut lead = 1.0;
            for k in 1..=n1 {
                lead *= -alpha / k as f64;
            }
            lead * (harmonic - alpha.ln())
        }
        None => gamma(1.0 - s)? * alpha.powf(s - 1.0),
    };
    let mut factor = 1.0; // (-alpha)^k / k!
    for k in 0..=EXPANSION_TERMS {
        if k > 0 {
            factor *= -alpha / k as f64;
        }
        if Some(k) == skip {
            continue;
        }
        let term = zeta(s - k as f64)? * factor;
        total += term;
        if k > 2 && term.abs() < 1e-16 * total.abs() && factor.abs() < 1e-16 {
            break;
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeta_special_values() {
        assert_eq!(zeta(0.0).unwrap(), -0.5);
        assert!((zeta(2.0).unwrap() - PI * PI / 6.0).abs() < 1e-15);
        assert!((zeta(4.0).unwrap() - PI.powi(4) / 90.0).abs() < 1e-15);
        assert!((zeta(-1.0).unwrap() + 1.0 / 12.0).abs() < 1e-17);
        assert_eq!(zeta(-2.0).unwrap(), 0.0);
        assert_eq!(zeta(1.0), Err(SpecialError::PoleAtOne));
    }

    #[test]
    fn zeta_off_integers() {
        assert!((zeta(0.5).unwrap() + 1.460_354_508_809_586_8).abs() < 1e-14);
        assert!((zeta(1.5).unwrap() - 2.612_375_348_685_488).abs() < 1e-14);
        assert!((zeta(-0.5).unwrap() + 0.207_886_224_977_354_57).abs() < 1e-14);
        assert!((zeta(-3.5).unwrap() - 0.004_441_011_335_479_432).abs() < 1e-15);
    }

    #[test]
    fn polylog_at_one_is_zeta() {
        assert_eq!(polylog(2.0, 1.0).unwrap(), zeta(2.0).unwrap());
        assert_eq!(polylog(1.0, 1.0), Err(SpecialError::PoleAtOne));
        // Direct partial sums of 1/n^2 with the 1/N tail bound.
        let n = 100_000u64;
        let partial: f64 = (1..=n).rev().map(|k| 1.0 / (k as f64).powi(2)).sum();
        let gap = zeta(2.0).unwrap() - partial;
        assert!(gap > 0.0 && gap < 1.0 / n as f64);
    }

    #[test]
    fn branches_agree_at_crossover() {
        for s in [0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 4.0, -1.0, -0.5] {
            let direct = polylog_direct(s, POLYLOG_CROSSOVER).unwrap();
            let expansion = polylog_expansion(s, POLYLOG_CROSSOVER).unwrap();
            assert!((direct - expansion).abs() < 1e-12, "s={s}: {direct} vs {expansion}");
        }
    }

    #[test]
    fn closed_forms() {
        // g_1(z) = -ln(1 - z), g_0(z) = z/(1-z), g_{-1}(z) = z/(1-z)^2
        for z in [0.3f64, 0.7, 0.95] {
            assert!((polylog(1.0, z).unwrap() + (1.0 - z).ln()).abs() < 1e-13, "z={z}");
            assert!((polylog(0.0, z).unwrap() - z / (1.0 - z)).abs() < 1e-12 * (1.0 - z).recip());
            assert!((polylog(-1.0, z).unwrap() - z / (1.0 - z).powi(2)).abs() < 1e-11 * (1.0 - z).powi(-2));
        }
        // g_2(1/2) = pi^2/12 - ln^2(2)/2
        let want = PI * PI / 12.0 - 0.5 * std::f64::consts::LN_2.powi(2);
        assert!((polylog(2.0, 0.5).unwrap() - want).abs() < 1e-15);
        assert!((polylog(2.0, -1.0).unwrap() + PI * PI / 12.0).abs() < 1e-15);
    }

    #[test]
    fn domain() {
        assert!(polylog(2.0, 1.5).is_err());
        assert!(polylog_expansion(2.0, 1e-4).is_err());
    }
}
