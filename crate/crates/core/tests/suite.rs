use gftable::catalog;
use gftable::harness::{run_suite, run_suite_with, CheckConfig, Execution, SuiteReport, Verdict};

#[test]
fn default_suite_passes_everywhere() {
    let report = run_suite(&CheckConfig::default());
    let failures: Vec<_> = report.reports.iter().filter(|r| !r.passed()).map(|r| (&r.id, &r.worst_point)).collect();
    assert!(failures.is_empty(), "{failures:#?}");
    assert!(report.all_passed());
    assert!(catalog::list_identities().len() >= 35);
    assert_eq!(report.totals.checks, report.reports.len());
    assert_eq!(report.totals.passed + report.totals.failed, report.totals.checks);
}

#[test]
fn sequential_and_parallel_bodies_are_identical() {
    let config = CheckConfig { terms: 60, ..CheckConfig::default() };
    let a = run_suite_with(&config, Execution::Sequential).stamped();
    let b = run_suite_with(&config, Execution::Parallel);
    let c = run_suite_with(&config, Execution::Sequential);
    assert_eq!(a.body_json(), b.body_json());
    assert_eq!(b.body_json(), c.body_json());
}

#[test]
fn unattainable_tolerance_fails() {
    let config = CheckConfig { abs_tol: 1e-30, rel_tol: 1e-30, ..CheckConfig::default() };
    let report = run_suite(&config);
    assert!(!report.all_passed());
    assert!(report.totals.failed > 0);
    for r in report.reports.iter().filter(|r| r.verdict == Verdict::Fail) {
        assert!(r.worst_point.as_ref().is_some_and(|p| !p.pass), "{}", r.id);
    }
}

#[test]
fn report_round_trips_through_json() {
    let config = CheckConfig { terms: 40, ..CheckConfig::default() };
    let report = run_suite(&config).stamped();
    let back = SuiteReport::from_json(&report.to_json()).unwrap();
    assert_eq!(back, report);
    assert_eq!(back.to_json(), report.to_json());
}

#[test]
fn verdicts_follow_the_point_rule() {
    let config = CheckConfig { terms: 12, ..CheckConfig::default() };
    for r in run_suite(&config).reports {
        let all_ok = r.points.iter().all(|p| {
            p.skipped
                || match (p.abs_err, p.rel_err) {
                    (Some(a), Some(e)) => a <= config.abs_tol || e <= config.rel_tol,
                    _ => false,
                }
        });
        assert_eq!(r.passed(), all_ok, "{}", r.id);
    }
}
