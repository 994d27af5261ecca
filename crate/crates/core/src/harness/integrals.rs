//! Special-function values against adaptive quadrature of their integral
//! definitions.

use std::f64::consts::{FRAC_PI_2, PI};

use super::config::CheckConfig;
use super::report::{CheckKind, CheckReport, PointResult};
use super::HarnessError;
use crate::quadrature::{
    integrate_sqrt_start_with, integrate_to_infinity_with, integrate_with, QuadratureError, Tolerance,
};
use crate::special::central::{central_binomial, CentralBinomialKind};
use crate::special::constants::euler_gamma;
use crate::special::elliptic::elliptic_series;
use crate::special::zeta::polylog_direct;
use crate::special::{self, BesselKind, EllipticKind, ExpIntKind};

/// Integral-defined functions with a quadrature cross-check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuadFn {
    Gamma,
    GammaStar,
    UpperGamma,
    Erf,
    E1,
    En,
    Ei,
    Si,
    Ci,
    Shi,
    Chi,
    BesselJ,
    BesselI,
    EllipticK,
    EllipticE,
    Polylog,
    Zeta,
    CentralBinomial,
}

impl QuadFn {
    pub const ALL: [QuadFn; 18] = [
        QuadFn::Gamma,
        QuadFn::GammaStar,
        QuadFn::UpperGamma,
        QuadFn::Erf,
        QuadFn::E1,
        QuadFn::En,
        QuadFn::Ei,
        QuadFn::Si,
        QuadFn::Ci,
        QuadFn::Shi,
        QuadFn::Chi,
        QuadFn::BesselJ,
        QuadFn::BesselI,
        QuadFn::EllipticK,
        QuadFn::EllipticE,
        QuadFn::Polylog,
        QuadFn::Zeta,
        QuadFn::CentralBinomial,
    ];

    pub fn id(self) -> &'static str {
        match self {
            QuadFn::Gamma => "quad-gamma",
            QuadFn::GammaStar => "quad-gamma-star",
            QuadFn::UpperGamma => "quad-upper-gamma",
            QuadFn::Erf => "quad-erf",
            QuadFn::E1 => "quad-e1",
            QuadFn::En => "quad-en",
            QuadFn::Ei => "quad-ei",
            QuadFn::Si => "quad-si",
            QuadFn::Ci => "quad-ci",
            QuadFn::Shi => "quad-shi",
            QuadFn::Chi => "quad-chi",
            QuadFn::BesselJ => "quad-bessel-j",
            QuadFn::BesselI => "quad-bessel-i",
            QuadFn::EllipticK => "quad-elliptic-k",
            QuadFn::EllipticE => "quad-elliptic-e",
            QuadFn::Polylog => "quad-polylog",
            QuadFn::Zeta => "quad-zeta",
            QuadFn::CentralBinomial => "quad-central-binomial",
        }
    }

    pub fn from_id(id: &str) -> Option<QuadFn> {
        QuadFn::ALL.into_iter().find(|f| f.id() == id)
    }

    /// Names of the parameters, in the order [`QuadFn::grid`] supplies them.
    pub fn parameter_names(self) -> &'static [&'static str] {
        match self {
            QuadFn::Gamma => &["x"],
            QuadFn::GammaStar | QuadFn::UpperGamma => &["a", "x"],
            QuadFn::En => &["n", "z"],
            QuadFn::BesselJ | QuadFn::BesselI => &["nu", "z"],
            QuadFn::EllipticK | QuadFn::EllipticE => &["m"],
            QuadFn::Polylog => &["s", "z"],
            QuadFn::Zeta => &["s"],
            QuadFn::CentralBinomial => &["n"],
            _ => &["z"],
        }
    }

    /// The standard parameter grid.
    pub fn grid(self) -> Vec<Vec<f64>> {
        let one = |xs: &[f64]| xs.iter().map(|&x| vec![x]).collect();
        let two = |xs: &[f64], ys: &[f64]| xs.iter().flat_map(|&x| ys.iter().map(move |&y| vec![x, y])).collect();
        match self {
            QuadFn::Gamma => one(&[0.5, 1.5, 2.5, 4.7, 10.0]),
            QuadFn::GammaStar => two(&[0.5, 1.0, 2.5], &[0.1, 1.0, 3.0]),
            QuadFn::UpperGamma => two(&[0.5, 2.5], &[0.5, 3.0, 6.0]),
            QuadFn::Erf => one(&[0.25, 0.5, 1.0, 2.0, 3.0]),
            QuadFn::E1 => one(&[0.25, 1.0, 2.0, 5.0, 8.0]),
            QuadFn::En => two(&[2.0, 3.0], &[0.5, 2.0]),
            QuadFn::Ei => one(&[0.25, 1.0, 2.0, 5.0]),
            QuadFn::Si | QuadFn::Ci => one(&[0.5, 1.0, 2.0, 5.0, 10.0]),
            QuadFn::Shi | QuadFn::Chi => one(&[0.5, 1.0, 2.0, 5.0]),
            QuadFn::BesselJ | QuadFn::BesselI => two(&[0.0, 0.5, 1.0, 2.0], &[0.5, 2.0, 5.0, 10.0]),
            QuadFn::EllipticK | QuadFn::EllipticE => one(&[0.1, 0.5, 0.9]),
            QuadFn::Polylog => two(&[1.5, 2.0, 3.0], &[0.3, 0.5, 0.7, 0.9]),
            QuadFn::Zeta => one(&[1.5, 2.0, 3.0, 4.5]),
            QuadFn::CentralBinomial => one(&[1.0, 5.0, 10.0, 50.0]),
        }
    }
}

fn label(f: QuadFn, params: &[f64]) -> String {
    f.parameter_names().iter().zip(params).map(|(n, v)| format!("{n}={v}")).collect::<Vec<_>>().join(", ")
}

/// `int_0^inf f`, split at 1 with the square-root substitution on `[0, 1]`.
fn integrate_zero_to_infinity<F: Fn(f64) -> f64 + Copy>(f: F, tol: Tolerance) -> Result<f64, QuadratureError> {
    let head = sqrt_start(f, 0.0, 1.0, tol)?;
    let tail = to_infinity(f, 1.0, tol)?;
    Ok(head + tail)
}

fn finite<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: Tolerance) -> Result<f64, QuadratureError> {
    integrate_with(f, a, b, tol).map(|q| q.value)
}

fn sqrt_start<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: Tolerance) -> Result<f64, QuadratureError> {
    integrate_sqrt_start_with(f, a, b, tol).map(|q| q.value)
}

fn to_infinity<F: Fn(f64) -> f64>(f: F, a: f64, tol: Tolerance) -> Result<f64, QuadratureError> {
    integrate_to_infinity_with(f, a, tol).map(|q| q.value)
}

/// `int_0^(pi/2) (1 - m sin^2 t)^p dt`.
pub fn elliptic_integral(m: f64, exponent: f64, tol: Tolerance) -> Result<f64, QuadratureError> {
    finite(|t| (1.0 - m * t.sin().powi(2)).powf(exponent), 0.0, FRAC_PI_2, tol)
}

/// Which integrand exponent reproduces the series value of `kind` at `m`:
/// both `±1/2` are integrated and the closer one is returned.
pub fn resolve_elliptic_exponent(kind: EllipticKind, m: f64, tol: Tolerance) -> Result<f64, HarnessError> {
    let series = elliptic_series(kind, m)?;
    let minus = elliptic_integral(m, -0.5, tol)?;
    let plus = elliptic_integral(m, 0.5, tol)?;
    Ok(if (minus - series).abs() <= (plus - series).abs() { -0.5 } else { 0.5 })
}

fn param(params: &[f64], i: usize) -> Result<f64, HarnessError> {
    params.get(i).copied().ok_or_else(|| HarnessError::BadParameters(format!("missing parameter {}", i + 1)))
}

/// `(library value, quadrature value)` for one parameter tuple.
pub fn quadrature_pair(f: QuadFn, params: &[f64], tol: Tolerance) -> Result<(f64, f64), HarnessError> {
    let p0 = param(params, 0)?;
    let g = euler_gamma();
    let pair = match f {
        QuadFn::Gamma => {
            let x = p0;
            let integrand = move |t: f64| t.powf(x - 1.0) * (-t).exp();
            (special::gamma(x)?, integrate_zero_to_infinity(integrand, tol)?)
        }
        QuadFn::GammaStar => {
            let (a, x) = (p0, param(params, 1)?);
            let lower = sqrt_start(|t| t.powf(a - 1.0) * (-t).exp(), 0.0, x, tol)?;
            (special::gamma_star(a, x)?, lower * x.powf(-a) / special::gamma(a)?)
        }
        QuadFn::UpperGamma => {
            let (a, x) = (p0, param(params, 1)?);
            (special::upper_gamma(a, x)?, to_infinity(|t| t.powf(a - 1.0) * (-t).exp(), x, tol)?)
        }
        QuadFn::Erf => (special::erf(p0), 2.0 / PI.sqrt() * finite(|t| (-t * t).exp(), 0.0, p0, tol)?),
        QuadFn::E1 => (special::exp_integral(ExpIntKind::E1, p0)?, to_infinity(|t| (-t).exp() / t, p0, tol)?),
        QuadFn::En => {
            let (n, z) = (p0, param(params, 1)?);
            if n < 0.0 || n != n.floor() {
                return Err(HarnessError::BadParameters(format!("order {n} must be a non-negative integer")));
            }
            let value = special::exp_integral(ExpIntKind::En(n as u32), z)?;
            (value, to_infinity(|t| (-z * t).exp() / t.powf(n), 1.0, tol)?)
        }
        QuadFn::Ei => {
            let z = p0;
            let value = special::exp_integral(ExpIntKind::Ei, z)?;
            (value, g + z.ln() + finite(|t| t.exp_m1() / t, 0.0, z, tol)?)
        }
        QuadFn::Si => (special::exp_integral(ExpIntKind::Si, p0)?, finite(|t| t.sin() / t, 0.0, p0, tol)?),
        QuadFn::Ci => {
            let z = p0;
            let value = special::exp_integral(ExpIntKind::Ci, z)?;
            (value, g + z.ln() - finite(|t| 2.0 * (0.5 * t).sin().powi(2) / t, 0.0, z, tol)?)
        }
        QuadFn::Shi => (special::exp_integral(ExpIntKind::Shi, p0)?, finite(|t| t.sinh() / t, 0.0, p0, tol)?),
        QuadFn::Chi => {
            let z = p0;
            let value = special::exp_integral(ExpIntKind::Chi, z)?;
            (value, g + z.ln() + finite(|t| 2.0 * (0.5 * t).sinh().powi(2) / t, 0.0, z, tol)?)
        }
        QuadFn::BesselJ | QuadFn::BesselI => {
            let (nu, z) = (p0, param(params, 1)?);
            if nu <= -0.5 {
                return Err(HarnessError::BadParameters(format!("integral form needs nu > -1/2, got {nu}")));
            }
            let (kind, integral) = if f == QuadFn::BesselJ {
                (BesselKind::J, finite(|t| (z * t.cos()).cos() * t.sin().powf(2.0 * nu), 0.0, PI, tol)?)
            } else {
                (BesselKind::I, finite(|t| (z * t.cos()).exp() * t.sin().powf(2.0 * nu), 0.0, PI, tol)?)
            };
            let prefactor = (0.5 * z).powf(nu) / (PI.sqrt() * special::gamma(nu + 0.5)?);
            (special::bessel(kind, nu, z)?, prefactor * integral)
        }
        QuadFn::EllipticK | QuadFn::EllipticE => {
            let kind = if f == QuadFn::EllipticK { EllipticKind::K } else { EllipticKind::E };
            let exponent = resolve_elliptic_exponent(kind, p0, tol)?;
            (special::elliptic(kind, p0)?, elliptic_integral(p0, exponent, tol)?)
        }
        QuadFn::Polylog => {
            let (s, z) = (p0, param(params, 1)?);
            if !(z > 0.0 && z < 1.0) {
                return Err(HarnessError::BadParameters(format!("integral form needs 0 < z < 1, got {z}")));
            }
            let integrand = move |t: f64| {
                let denominator = (t.exp() - z) / z;
                t.powf(s - 1.0) / denominator
            };
            (polylog_direct(s, z)?, integrate_zero_to_infinity(integrand, tol)? / special::gamma(s)?)
        }
        QuadFn::Zeta => {
            let s = p0;
            if s <= 1.0 {
                return Err(HarnessError::BadParameters(format!("integral form needs s > 1, got {s}")));
            }
            let integrand = move |t: f64| t.powf(s - 1.0) / t.exp_m1();
            (special::zeta(s)?, integrate_zero_to_infinity(integrand, tol)? / special::gamma(s)?)
        }
        QuadFn::CentralBinomial => {
            let n = p0;
            if n < 0.0 || n != n.floor() {
                return Err(HarnessError::BadParameters(format!("n = {n} must be a non-negative integer")));
            }
            let wallis = 2.0 / PI * finite(|t| t.sin().powi(2 * n as i32), 0.0, FRAC_PI_2, tol)?;
            (central_binomial(CentralBinomialKind::Exact, n as u64), wallis)
        }
    };
    Ok(pair)
}

/// Compare library and quadrature values at the given parameter tuples.
pub fn quadrature_check_at(f: QuadFn, grid: &[Vec<f64>], config: &CheckConfig) -> CheckReport {
    let tol = Tolerance { abs: config.quadrature_tol, rel: config.quadrature_tol.min(crate::quadrature::REL_TOL) };
    let points = grid
        .iter()
        .map(|params| {
            let lbl = label(f, params);
            let z = params.last().copied().unwrap_or(0.0);
            match quadrature_pair(f, params, tol) {
                Ok((value, quad)) => PointResult::compare(lbl, z, value, quad, config.abs_tol, config.rel_tol),
                Err(e) => PointResult::failure(lbl, z, e.to_string()),
            }
        })
        .collect();
    CheckReport::new(f.id().to_string(), CheckKind::Quadrature, points, config.abs_tol, config.rel_tol)
}

/// Compare library and quadrature values over the standard grid.
pub fn quadrature_check(f: QuadFn, config: &CheckConfig) -> CheckReport {
    quadrature_check_at(f, &f.grid(), config)
}
