use proptest::prelude::*;

use gftable::catalog::{self, Parity};
use gftable::exact::{self, int};
use gftable::harness::{CheckConfig, CheckKind, CheckReport, PointResult, SamplePolicy, SuiteReport};
use gftable::lagrange::{bethe_series, central_shifted_series, tree_coefficient};
use gftable::special::incomplete::gamma_star_alternating;
use gftable::special::zeta::{polylog_direct, polylog_expansion};
use gftable::special::{erf, gamma, gamma_star, upper_gamma};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn gamma_recurrence(x in 0.5f64..40.0) {
        let lhs = gamma(x + 1.0).unwrap();
        let rhs = x * gamma(x).unwrap();
        prop_assert!((lhs - rhs).abs() / lhs <= 1e-12);
    }

    #[test]
    fn erf_is_odd_and_bounded(x in -10.0f64..10.0) {
        prop_assert_eq!(erf(-x), -erf(x));
        prop_assert!(erf(x).abs() <= 1.0);
    }

    // The relation through Gamma(a, x) loses about log10(x^-a) digits to
    // cancellation, so x stays away from zero.
    #[test]
    fn gamma_star_forms_agree(a in 0.2f64..2.5, x in 0.1f64..4.0) {
        let g = gamma_star(a, x).unwrap();
        let alt = gamma_star_alternating(a, x).unwrap();
        let via_upper = x.powf(-a) * (1.0 - upper_gamma(a, x).unwrap() / gamma(a).unwrap());
        prop_assert!((g - alt).abs() <= 1e-10 * g.abs().max(1.0));
        prop_assert!((g - via_upper).abs() <= 1e-10 * g.abs().max(1.0));
    }

    #[test]
    fn polylog_branches_agree_near_crossover(s in 1.1f64..4.0, z in 0.45f64..0.55) {
        let d = polylog_direct(s, z).unwrap();
        let e = polylog_expansion(s, z).unwrap();
        prop_assert!((d - e).abs() <= 1e-8, "s={} z={}: {} vs {}", s, z, d, e);
    }

    #[test]
    fn catalog_parity(index in 0usize.., k in 0usize..40) {
        let entries = catalog::Catalog::global().entries();
        let entry = &entries[index % entries.len()];
        match entry.parity {
            Parity::Odd => prop_assert_eq!(entry.coefficient(2 * k), int(0), "{}", entry.id),
            Parity::Even => prop_assert_eq!(entry.coefficient(2 * k + 1), int(0), "{}", entry.id),
            Parity::Mixed => {}
        }
    }

    #[test]
    fn tree_ladder_step(k in -3i32..2, n in 1u64..=25) {
        prop_assert_eq!(tree_coefficient(k + 1, n), tree_coefficient(k, n) * int(n as i64));
    }

    #[test]
    fn bethe_multiplicative(r1 in 0i64..6, r2 in 0i64..6) {
        let product = &bethe_series(&int(r1), 15) * &bethe_series(&int(r2), 15);
        prop_assert_eq!(product, bethe_series(&int(r1 + r2), 15));
    }

    #[test]
    fn central_shifted_factors(r in 0u64..6) {
        let lhs = central_shifted_series(r, 15);
        let rhs = &bethe_series(&int(r as i64), 15) * &central_shifted_series(0, 15);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn verdict_follows_point_rule(
        values in prop::collection::vec((-1e3f64..1e3, -1e3f64..1e3), 1..8),
        abs_exp in -14i32..-1,
        rel_exp in -14i32..-1,
    ) {
        let (abs_tol, rel_tol) = (10f64.powi(abs_exp), 10f64.powi(rel_exp));
        let points: Vec<PointResult> = values
            .iter()
            .enumerate()
            .map(|(i, &(a, b))| PointResult::compare(format!("p{i}"), i as f64, a, b, abs_tol, rel_tol))
            .collect();
        let expected = points.iter().all(|p| p.abs_err.unwrap() <= abs_tol || p.rel_err.unwrap() <= rel_tol);
        let report = CheckReport::new("prop".into(), CheckKind::Series, points, abs_tol, rel_tol);
        prop_assert_eq!(report.passed(), expected);
        prop_assert!(report.worst_point.is_some());
    }

    #[test]
    fn reports_round_trip(
        values in prop::collection::vec((any::<f64>(), any::<f64>()), 0..6),
        terms in 8usize..500,
        fractions in prop::collection::vec(-1.0f64..=1.0, 1..6),
    ) {
        let points: Vec<PointResult> = values
            .iter()
            .enumerate()
            .map(|(i, &(a, b))| PointResult::compare(format!("p{i}"), a, a, b, 1e-9, 1e-9))
            .filter(|p| p.z.is_finite())
            .collect();
        let config = CheckConfig { terms, sample_policy: SamplePolicy { fractions }, ..CheckConfig::default() };
        let report = CheckReport::new("prop".into(), CheckKind::Quadrature, points, 1e-9, 1e-9);
        let suite = SuiteReport::new(config.clone(), vec![report]).stamped();
        prop_assert_eq!(SuiteReport::from_json(&suite.to_json()).unwrap(), suite);
        prop_assert_eq!(CheckConfig::parse(&config.to_config_text()).unwrap(), config);
    }

    #[test]
    fn rational_text_round_trips(p in -10_000i64..10_000, q in 1i64..10_000) {
        let r = exact::ratio(p, q);
        prop_assert_eq!(exact::parse_rational(&exact::format_rational(&r)).unwrap(), r);
    }
}
