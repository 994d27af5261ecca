//! The verification engine: partial sums against closed forms, library
//! values against quadrature, and suite reports.

mod config;
mod eval;
mod integrals;
mod report;

use thiserror::Error;

pub use config::{CheckConfig, ConfigError, SamplePolicy};
pub use eval::{evaluate, EVAL_FUNCTIONS};
pub use integrals::{
    elliptic_integral, quadrature_check, quadrature_check_at, quadrature_pair, resolve_elliptic_exponent, QuadFn,
};
pub use report::{CheckKind, CheckReport, PointResult, SuiteReport, Totals, Verdict};

use crate::catalog::{self, CatalogError, IdentityEntry};
use crate::exact;
use crate::lagrange::LagrangeError;
use crate::quadrature::QuadratureError;
use crate::special::SpecialError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum HarnessError {
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error("quadrature: {0}")]
    Quadrature(#[from] QuadratureError),
    #[error(transparent)]
    Special(#[from] SpecialError),
    #[error(transparent)]
    Lagrange(#[from] LagrangeError),
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error("unknown function `{0}`")]
    UnknownFunction(String),
    #[error("bad parameters: {0}")]
    BadParameters(String),
}

/// How a suite distributes its independent checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    /// Data-parallel over checks; falls back to sequential without the
    /// `parallel` feature.
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

/// Sample points `fraction * radius` for an entry, deduplicated in order.
pub fn sample_points(entry: &IdentityEntry, config: &CheckConfig) -> Vec<f64> {
    let radius = entry.domain.sample_radius();
    let mut points: Vec<f64> = Vec::new();
    for &fraction in &config.sample_policy.fractions {
        let z = fraction * radius;
        // -0.0 and 0.0 are the same sample.
        let z = if z == 0.0 { 0.0 } else { z };
        if !points.contains(&z) {
            points.push(z);
        }
    }
    points
}

/// Horner sum `sum_{n<=N} c_n z^n` and the magnitude of its last nonzero term.
fn partial_sum(coeffs: &[f64], z: f64) -> (f64, f64) {
    let value = coeffs.iter().rev().fold(0.0, |acc, &c| acc * z + c);
    let last = coeffs
        .iter()
        .enumerate()
        .rev()
        .find(|(_, c)| **c != 0.0)
        .map(|(n, c)| (c * z.powi(n as i32)).abs())
        .unwrap_or(0.0);
    (value, last)
}

/// Partial sum of the coefficient rule through `z^terms` against the closed
/// form at each sample point. Points outside a real-restricted domain are
/// skipped with the reason recorded.
pub fn check_identity(id: &str, config: &CheckConfig) -> Result<CheckReport, HarnessError> {
    let entry = catalog::entry(id)?;
    let coeffs: Vec<f64> = entry.coefficients(config.terms).iter().map(exact::to_f64).collect();
    let points = sample_points(entry, config)
        .into_iter()
        .map(|z| {
            let label = format!("z={z}");
            match entry.closed_form(z) {
                Ok(closed) => {
                    let (value, last) = partial_sum(&coeffs, z);
                    let mut point = PointResult::compare(label, z, value, closed, config.abs_tol, config.rel_tol);
                    point.last_term = Some(last).filter(|t| t.is_finite());
                    point
                }
                Err(CatalogError::OutOfDomain { reason, .. }) => PointResult::skip(label, z, reason),
                Err(e) => PointResult::failure(label, z, e.to_string()),
            }
        })
        .collect();
    Ok(CheckReport::new(entry.id.to_string(), CheckKind::Series, points, config.abs_tol, config.rel_tol))
}

/// Every check id: catalog identities first, then quadrature checks.
pub fn check_ids() -> Vec<&'static str> {
    let mut ids = catalog::list_identities();
    ids.extend(QuadFn::ALL.iter().map(|f| f.id()));
    ids
}

/// Run one check by id, catalog or quadrature.
pub fn run_check(id: &str, config: &CheckConfig) -> Result<CheckReport, HarnessError> {
    if let Some(f) = QuadFn::from_id(id) {
        return Ok(quadrature_check(f, config));
    }
    match check_identity(id, config) {
        Err(HarnessError::Catalog(CatalogError::UnknownIdentity(_))) => Err(HarnessError::UnknownCheck(id.to_string())),
        other => other,
    }
}

fn run_one(id: &str, config: &CheckConfig) -> CheckReport {
    run_check(id, config).expect("registered check ids resolve")
}

/// Every catalog and quadrature check, in registry order.
pub fn run_suite(config: &CheckConfig) -> SuiteReport {
    run_suite_with(config, Execution::default())
}

pub fn run_suite_with(config: &CheckConfig, execution: Execution) -> SuiteReport {
    let ids = check_ids();
    let reports = match execution {
        Execution::Sequential => ids.iter().map(|id| run_one(id, config)).collect(),
        Execution::Parallel => run_parallel(&ids, config),
    };
    SuiteReport::new(config.clone(), reports)
}

#[cfg(feature = "parallel")]
fn run_parallel(ids: &[&'static str], config: &CheckConfig) -> Vec<CheckReport> {
    use rayon::prelude::*;
    ids.par_iter().map(|id| run_one(id, config)).collect()
}

#[cfg(not(feature = "parallel"))]
fn run_parallel(ids: &[&'static str], config: &CheckConfig) -> Vec<CheckReport> {
    ids.iter().map(|id| run_one(id, config)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric_passes_tightly() {
        let report = check_identity("geometric", &CheckConfig::default()).unwrap();
        assert!(report.passed());
        let worst = report.points.iter().filter_map(|p| p.abs_err).fold(0.0, f64::max);
        assert!(worst <= 1e-12, "worst {worst:e}");
    }

    #[test]
    fn exp_is_exact_at_zero() {
        let report = check_identity("exp", &CheckConfig::default()).unwrap();
        let origin = report.points.iter().find(|p| p.z == 0.0).unwrap();
        assert_eq!(origin.series_value, origin.closed_value);
        assert_eq!(origin.abs_err, Some(0.0));
    }

    #[test]
    fn bernoulli_gf_samples_inside_two_pi() {
        let report = check_identity("bernoulli-gf", &CheckConfig::default()).unwrap();
        assert!(report.passed(), "{:?}", report.worst_point);
        let two_pi = 2.0 * std::f64::consts::PI;
        assert!(report.points.iter().all(|p| p.z.abs() <= 0.8 * two_pi + 1e-12));
        assert!(report.points.iter().any(|p| (p.z.abs() - 0.8 * two_pi).abs() < 1e-12));
    }

    #[test]
    fn real_only_domains_skip_negative_points() {
        let report = check_identity("elliptic-k", &CheckConfig::default()).unwrap();
        assert!(report.passed());
        assert!(report.points.iter().any(|p| p.skipped && p.z < 0.0 && p.note.is_some()));
    }

    #[test]
    fn short_partial_sums_fail_with_worst_point() {
        let config = CheckConfig { terms: 8, ..CheckConfig::default() };
        let report = check_identity("dilogarithm", &config).unwrap();
        assert_eq!(report.verdict, Verdict::Fail);
        let worst = report.worst_point.unwrap();
        assert!(!worst.pass);
        assert_eq!(worst.z, 0.8);
        assert!(worst.last_term.unwrap() > 1e-3);
    }

    #[test]
    fn unknown_ids() {
        assert!(matches!(check_identity("nope", &CheckConfig::default()), Err(HarnessError::Catalog(_))));
        assert!(matches!(run_check("nope", &CheckConfig::default()), Err(HarnessError::UnknownCheck(_))));
    }

    #[test]
    fn partial_sum_and_last_term() {
        let (v, last) = partial_sum(&[1.0, 2.0, 0.0], 0.5);
        assert_eq!(v, 2.0);
        assert_eq!(last, 1.0);
    }

    #[test]
    fn sample_points_are_scaled_and_deduplicated() {
        let entry = catalog::entry("exp").unwrap();
        let config = CheckConfig::default();
        assert_eq!(sample_points(entry, &config), vec![0.0, 0.4, -0.4, 2.0, -2.0, 3.2]);
        let config = CheckConfig { sample_policy: SamplePolicy { fractions: vec![0.0, -0.0, 0.5] }, ..config };
        assert_eq!(sample_points(catalog::entry("log").unwrap(), &config), vec![0.0, 0.5]);
    }
}
