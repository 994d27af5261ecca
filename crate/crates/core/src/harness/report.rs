//! Check and suite reports, serialized as JSON.

use serde::{Deserialize, Serialize};

use super::config::CheckConfig;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckKind {
    /// Partial sum of the coefficient rule against the closed form.
    Series,
    /// Special-function value against quadrature of its integral definition.
    Quadrature,
}

/// One comparison. For series checks `series_value` is the partial sum and
/// `closed_value` the closed form; for quadrature checks they are the
/// special-function value and the quadrature value.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PointResult {
    pub label: String,
    pub z: f64,
    pub series_value: Option<f64>,
    pub closed_value: Option<f64>,
    pub abs_err: Option<f64>,
    pub rel_err: Option<f64>,
    /// Magnitude of the last nonzero term of the partial sum (diagnostic only).
    pub last_term: Option<f64>,
    pub pass: bool,
    pub skipped: bool,
    pub note: Option<String>,
}

impl PointResult {
    pub fn skip(label: String, z: f64, reason: String) -> Self {
        PointResult {
            label,
            z,
            series_value: None,
            closed_value: None,
            abs_err: None,
            rel_err: None,
            last_term: None,
            pass: true,
            skipped: true,
            note: Some(reason),
        }
    }

    pub fn failure(label: String, z: f64, reason: String) -> Self {
        PointResult { pass: false, skipped: false, ..PointResult::skip(label, z, reason) }
    }

    /// Compare two values: pass iff `abs_err <= abs_tol` or `rel_err <= rel_tol`.
    pub fn compare(label: String, z: f64, lhs: f64, rhs: f64, abs_tol: f64, rel_tol: f64) -> Self {
        if !(lhs.is_finite() && rhs.is_finite()) {
            return PointResult::failure(label, z, format!("non-finite value: {lhs} vs {rhs}"));
        }
        let abs_err = (lhs - rhs).abs();
        let rel_err = if rhs == 0.0 {
            if abs_err == 0.0 {
                0.0
            } else {
                f64::MAX
            }
        } else {
            // Clamp so the value stays representable in JSON.
            (abs_err / rhs.abs()).min(f64::MAX)
        };
        PointResult {
            label,
            z,
            series_value: Some(lhs),
            closed_value: Some(rhs),
            abs_err: Some(abs_err),
            rel_err: Some(rel_err),
            last_term: None,
            pass: abs_err <= abs_tol || rel_err <= rel_tol,
            skipped: false,
            note: None,
        }
    }

    /// How close the point is to failing; above 1 means it failed.
    fn severity(&self, abs_tol: f64, rel_tol: f64) -> f64 {
        if self.skipped {
            return f64::NEG_INFINITY;
        }
        match (self.abs_err, self.rel_err) {
            (Some(a), Some(r)) => (a / abs_tol).min(r / rel_tol),
            _ => f64::INFINITY,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub id: String,
    pub kind: CheckKind,
    pub points: Vec<PointResult>,
    pub verdict: Verdict,
    pub worst_point: Option<PointResult>,
}

impl CheckReport {
    pub fn new(id: String, kind: CheckKind, points: Vec<PointResult>, abs_tol: f64, rel_tol: f64) -> Self {
        let verdict = if points.iter().all(|p| p.pass) { Verdict::Pass } else { Verdict::Fail };
        let worst_point = points
            .iter()
            .filter(|p| !p.skipped)
            .max_by(|a, b| a.severity(abs_tol, rel_tol).total_cmp(&b.severity(abs_tol, rel_tol)))
            .cloned();
        CheckReport { id, kind, points, verdict, worst_point }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Totals {
    pub checks: usize,
    pub passed: usize,
    pub failed: usize,
    pub points: usize,
    pub skipped_points: usize,
}

impl Totals {
    pub fn tally(reports: &[CheckReport]) -> Totals {
        let passed = reports.iter().filter(|r| r.passed()).count();
        let points = reports.iter().map(|r| r.points.len()).sum();
        let skipped_points = reports.iter().flat_map(|r| &r.points).filter(|p| p.skipped).count();
        Totals { checks: reports.len(), passed, failed: reports.len() - passed, points, skipped_points }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub config: CheckConfig,
    pub totals: Totals,
    pub reports: Vec<CheckReport>,
    /// Seconds since the Unix epoch; excluded from the comparable body.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<u64>,
}

impl SuiteReport {
    pub fn new(config: CheckConfig, reports: Vec<CheckReport>) -> Self {
        SuiteReport { totals: Totals::tally(&reports), config, reports, timestamp: None }
    }

    pub fn stamped(mut self) -> Self {
        self.timestamp = std::time::SystemTime::now().duration_since(std::time::UNIX_EPOCH).ok().map(|d| d.as_secs());
        self
    }

    pub fn all_passed(&self) -> bool {
        self.totals.failed == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Serialization without the timestamp; byte-identical across runs.
    pub fn body_json(&self) -> String {
        SuiteReport { timestamp: None, ..self.clone() }.to_json()
    }

    pub fn from_json(text: &str) -> Result<SuiteReport, serde_json::Error> {
        serde_json::from_str(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn comparison_rule() {
        let p = PointResult::compare("z=1".into(), 1.0, 1.0 + 1e-10, 1.0, 1e-9, 1e-9);
        assert!(p.pass);
        let p = PointResult::compare("z=1".into(), 1.0, 2e6 + 1e-4, 2e6, 1e-9, 1e-9);
        assert!(p.pass, "relative error 5e-11 passes");
        let p = PointResult::compare("z=1".into(), 1.0, 1.1, 1.0, 1e-9, 1e-9);
        assert!(!p.pass);
        let p = PointResult::compare("z=0".into(), 0.0, 1e-12, 0.0, 1e-9, 1e-9);
        assert!(p.pass);
        assert!(!PointResult::compare("x".into(), 0.0, f64::INFINITY, 1.0, 1.0, 1.0).pass);
        let p = PointResult::compare("x".into(), 0.0, -3e305, 1.6e-308, 1e-9, 1e-9);
        assert_eq!(p.rel_err, Some(f64::MAX));
    }

    #[test]
    fn verdict_and_worst_point() {
        let points = vec![
            PointResult::compare("a".into(), 0.1, 1.0, 1.0, 1e-9, 1e-9),
            PointResult::compare("b".into(), 0.5, 1.5, 1.0, 1e-9, 1e-9),
            PointResult::skip("c".into(), -0.5, "outside".into()),
        ];
        let r = CheckReport::new("demo".into(), CheckKind::Series, points, 1e-9, 1e-9);
        assert_eq!(r.verdict, Verdict::Fail);
        assert_eq!(r.worst_point.as_ref().unwrap().label, "b");
        let t = Totals::tally(&[r]);
        assert_eq!((t.checks, t.failed, t.points, t.skipped_points), (1, 1, 3, 1));
    }

    #[test]
    fn json_round_trip_with_awkward_floats() {
        let points = vec![PointResult::compare("z=0.1".into(), 0.1, 0.1 + 0.2, 0.3, 1e-9, 1e-9)];
        let r = CheckReport::new("demo".into(), CheckKind::Quadrature, points, 1e-9, 1e-9);
        let suite = SuiteReport::new(CheckConfig::default(), vec![r]).stamped();
        let back = SuiteReport::from_json(&suite.to_json()).unwrap();
        assert_eq!(back, suite);
        assert!(!suite.body_json().contains("timestamp"));
    }
}
