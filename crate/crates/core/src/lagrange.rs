//! Lagrange inversion, the Bethe-lattice family
//! `[(1 - sqrt(1 - 4z))/(2z)]^r`, and sums over the tree function
//! `x = sum n^(n-1) z^n / n!` with `z = x e^(-x)`.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::catalog::{Boundary, CoeffRule, ConvergenceDomain, IdentityEntry};
use crate::exact::{self, Rational};
use crate::series::{Series, SeriesError};

/// Below this `|z|` the Bethe closed form is replaced by its series, since
/// `1 - sqrt(1 - 4z)` cancels catastrophically.
pub const SMALL_Z: f64 = 1e-4;
const SMALL_Z_TERMS: usize = 8;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LagrangeError {
    #[error("{function}: argument {value} is outside {bound}")]
    OutOfDomain { function: &'static str, value: f64, bound: &'static str },
    #[error("tree exponent offset {0} is not in -3..=2")]
    UnsupportedOffset(i32),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// Coefficients of `g(x)` as a series in `z = f(x)`:
/// `g(0) + sum_n (z^n/n) [x^(n-1)] (g'(x) (x/f(x))^n)`.
pub fn lagrange_coefficients(f: &Series, g: &Series, order: usize) -> Result<Series, LagrangeError> {
    if !f.constant_term().is_zero() {
        return Err(SeriesError::NonzeroConstantTerm.into());
    }
    if f.order() < 1 || f.coeffs()[1].is_zero() {
        return Err(SeriesError::NotInvertible.into());
    }
    let order = order.min(f.order()).min(g.order());
    // x / f(x) to the order needed for [x^(n-1)] with n <= order.
    let ratio = f.truncate(order).shift_down(1)?.recip()?;
    let slope = g.truncate(order).derive();
    let mut coeffs = vec![g.constant_term().clone()];
    let mut power = Series::one(order.saturating_sub(1));
    let ratio = ratio.truncate(order.saturating_sub(1));
    for n in 1..=order {
        power = &power * &ratio;
        let product = &slope.truncate(order - 1) * &power;
        coeffs.push(product.coeffs()[n - 1].clone() / exact::int(n as i64));
    }
    Ok(Series::new(coeffs))
}

/// `r (2n+r-1)! / ((n+r)! n!)` for `n >= 1`, and 1 at `n = 0`.
pub fn bethe_factorial_form(r: u64, n: u64) -> Rational {
    if n == 0 {
        return Rational::one();
    }
    exact::int(r as i64) * Rational::new(exact::factorial(2 * n + r - 1), exact::factorial(n + r) * exact::factorial(n))
}

/// `r (n+r+1)_(n-1) / n!` for `n >= 1`, and 1 at `n = 0`, with `(z)_0 = 1`.
pub fn bethe_pochhammer_form(r: u64, n: u64) -> Rational {
    if n == 0 {
        return Rational::one();
    }
    exact::int(r as i64) * exact::pochhammer(&exact::int((n + r + 1) as i64), n - 1) / exact::factorial_rational(n)
}

/// `r/(2n+r) C(2n+r, n)`, valid for any rational `r` through the generalized
/// binomial coefficient.
pub fn bethe_binomial_form(r: &Rational, n: u64) -> Rational {
    if n == 0 {
        return Rational::one();
    }
    let top = exact::int(2 * n as i64) + r;
    if top.is_zero() {
        // r = -2n: the limit of r/(2n+r) C(2n+r, n) is handled by a zero binomial.
        return Rational::zero();
    }
    r / &top * exact::binomial(&top, n)
}

/// The series of `[(1 - sqrt(1 - 4z))/(2z)]^r`.
pub fn bethe_series(r: &Rational, order: usize) -> Series {
    Series::from_fn(order, |n| bethe_binomial_form(r, n as u64))
}

/// `[(1 - sqrt(1 - 4z))/(2z)]^r` for `|z| < 1/4`.
pub fn bethe_gf(r: f64, z: f64) -> Result<f64, LagrangeError> {
    if !(z.abs() < 0.25) {
        return Err(LagrangeError::OutOfDomain { function: "bethe_gf", value: z, bound: "|z| < 1/4" });
    }
    if z.abs() < SMALL_Z {
        // Binomial-form coefficients in floating point; the next term is below 1e-28.
        let mut sum = 0.0;
        let mut power = 1.0;
        let r_exact = exact::from_f64(r).expect("finite r");
        for n in 0..SMALL_Z_TERMS {
            sum += exact::to_f64(&bethe_binomial_form(&r_exact, n as u64)) * power;
            power *= z;
        }
        return Ok(sum);
    }
    Ok(((1.0 - (1.0 - 4.0 * z).sqrt()) / (2.0 * z)).powf(r))
}

/// Series of `sum C(2n+r, n) z^n = (1-4z)^(-1/2) [(1 - sqrt(1-4z))/(2z)]^r`.
pub fn central_shifted_series(r: u64, order: usize) -> Series {
    Series::from_fn(order, |n| Rational::from_integer(exact::choose(2 * n as u64 + r, n as u64)))
}

pub fn central_shifted(r: u64, z: f64) -> Result<f64, LagrangeError> {
    if !(z.abs() < 0.25) {
        return Err(LagrangeError::OutOfDomain { function: "central_shifted", value: z, bound: "|z| < 1/4" });
    }
    Ok(bethe_gf(r as f64, z)? / (1.0 - 4.0 * z).sqrt())
}

/// Offsets `k` in `n^(n+k)` with a known closed form.
pub const TREE_OFFSETS: [i32; 6] = [-3, -2, -1, 0, 1, 2];

fn check_offset(k: i32) -> Result<(), LagrangeError> {
    if TREE_OFFSETS.contains(&k) {
        Ok(())
    } else {
        Err(LagrangeError::UnsupportedOffset(k))
    }
}

/// `n^(n+k) / n!`, exact (zero at `n = 0`).
pub fn tree_coefficient(k: i32, n: u64) -> Rational {
    if n == 0 {
        return Rational::zero();
    }
    exact::pow_rational(&exact::int(n as i64), n as i64 + k as i64) / exact::factorial_rational(n)
}

fn tree_closed_form(k: i32, x: f64) -> f64 {
    match k {
        -3 => x - 0.75 * x * x + x * x * x / 6.0,
        -2 => x - 0.5 * x * x,
        -1 => x,
        0 => x / (1.0 - x),
        1 => x / (1.0 - x).powi(3),
        2 => x * (1.0 + 2.0 * x) / (1.0 - x).powi(5),
        _ => unreachable!("offset checked by caller"),
    }
}

/// Closed form of `sum_{n>=1} n^(n+k)/n! (x e^-x)^n` for `0 <= x < 1`.
pub fn tree_sum(k: i32, x: f64) -> Result<f64, LagrangeError> {
    check_offset(k)?;
    if !(0.0..1.0).contains(&x) {
        return Err(LagrangeError::OutOfDomain { function: "tree_sum", value: x, bound: "0 <= x < 1" });
    }
    Ok(tree_closed_form(k, x))
}

/// Principal solution `x` of `x e^-x = z` for `-1/e < z < 1/e`, i.e. the
/// tree function at `z` (Halley's iteration).
pub fn tree_function(z: f64) -> Result<f64, LagrangeError> {
    let limit = (-1f64).exp();
    if !(z.abs() < limit) {
        return Err(LagrangeError::OutOfDomain { function: "tree_function", value: z, bound: "|z| < 1/e" });
    }
    // Start from the two-term series, then refine f(x) = x - z e^x.
    let mut x = z + z * z;
    if x >= 1.0 {
        x = 0.5;
    }
    for _ in 0..100 {
        let ex = x.exp();
        let f = x - z * ex;
        let d1 = 1.0 - z * ex;
        let d2 = -z * ex;
        let step = 2.0 * f * d1 / (2.0 * d1 * d1 - f * d2);
        x -= step;
        if step.abs() <= 1e-17 * x.abs().max(1e-300) {
            break;
        }
    }
    Ok(x)
}

/// `sum_{n=1}^{terms} n^(n+k)/n! z^n` accumulated exactly for rational `z`.
pub fn tree_partial_sum_exact(k: i32, z: &Rational, terms: u64) -> Result<Rational, LagrangeError> {
    check_offset(k)?;
    let mut acc = Rational::zero();
    let mut power = Rational::one();
    let mut fact = Rational::one();
    for n in 1..=terms {
        power *= z;
        fact *= exact::int(n as i64);
        acc += exact::pow_rational(&exact::int(n as i64), n as i64 + k as i64) * &power / &fact;
    }
    Ok(acc)
}

/// Catalog entries contributed by this module.
pub fn catalog_entries() -> Vec<IdentityEntry> {
    let mut v = Vec::new();
    let bethe_anchor = "1 + r sum (2n+r-1)! z^n/((n+r)! n!) = r sum C(2n+r,n) z^n/(2n+r) = [(1 - (1-4z)^(1/2))/(2z)]^r";
    for (id, r) in [("bethe-r1", 1u64), ("bethe-r2", 2), ("bethe-r3", 3)] {
        v.push(
            IdentityEntry::new(
                id,
                "Bethe-lattice generating function",
                bethe_anchor,
                CoeffRule::Term(Box::new(move |n| bethe_factorial_form(r, n as u64))),
                move |z| bethe_gf(r as f64, z).map_err(|e| e.to_string()),
                ConvergenceDomain::disk(0.25, Boundary::Open).with_notes("the series also converges at |z| = 1/4"),
            )
            .variable_map(match r {
                1 => "r = 1: Catalan numbers",
                2 => "r = 2",
                _ => "r = 3",
            }),
        );
    }
    let shifted_anchor = "sum C(2n+r,n) z^n = (1-4z)^(-1/2) [(1 - (1-4z)^(1/2))/(2z)]^r";
    for (id, r) in [("central-shifted-r1", 1u64), ("central-shifted-r2", 2)] {
        v.push(
            IdentityEntry::new(
                id,
                "shifted central binomial coefficients",
                shifted_anchor,
                CoeffRule::Term(Box::new(move |n| Rational::from_integer(exact::choose(2 * n as u64 + r, n as u64)))),
                move |z| central_shifted(r, z).map_err(|e| e.to_string()),
                ConvergenceDomain::disk(0.25, Boundary::Open),
            )
            .variable_map(if r == 1 { "r = 1" } else { "r = 2" }),
        );
    }
    let tree_ids = [
        ("tree-m3", -3, "sum n^(n-3)/n! (x e^-x)^n = x - 3x^2/4 + x^3/6"),
        ("tree-m2", -2, "sum n^(n-2)/n! (x e^-x)^n = x - x^2/2"),
        ("tree-m1", -1, "sum n^(n-1)/n! (x e^-x)^n = x"),
        ("tree-0", 0, "sum n^n/n! (x e^-x)^n = x/(1-x)"),
        ("tree-1", 1, "sum n^(n+1)/n! (x e^-x)^n = x/(1-x)^3"),
        ("tree-2", 2, "sum n^(n+2)/n! (x e^-x)^n = x(1+2x)/(1-x)^5"),
    ];
    for (id, k, anchor) in tree_ids {
        let boundary = if k <= -1 { Boundary::Closed } else { Boundary::Open };
        let mut domain = ConvergenceDomain::disk((-1f64).exp(), boundary);
        if boundary == Boundary::Closed {
            // x e^-x = -1/e has no real solution on the principal branch.
            domain = domain.excluding(&[-(-1f64).exp(), (-1f64).exp()]);
        }
        v.push(
            IdentityEntry::new(
                id,
                "tree-function sum",
                anchor,
                CoeffRule::Term(Box::new(move |n| tree_coefficient(k, n as u64))),
                move |z| Ok(tree_closed_form(k, tree_function(z).map_err(|e| e.to_string())?)),
                domain,
            )
            .variable_map("series in z = x e^-x; x recovered as the tree function of z"),
        );
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, ratio};
    use crate::series::{compose, revert};
    use proptest::prelude::*;

    #[test]
    fn identity_and_catalan() {
        let order = 10;
        let z = Series::variable(order);
        assert_eq!(lagrange_coefficients(&z, &z, order).unwrap(), z);
        let f = &z - &Series::monomial(int(1), 2, order);
        let g = lagrange_coefficients(&f, &z, order).unwrap();
        assert_eq!(g, revert(&f).unwrap());
        let catalan: Vec<Rational> = [0, 1, 1, 2, 5, 14].iter().map(|&c| int(c)).collect();
        assert_eq!(&g.coeffs()[..6], catalan.as_slice());
    }

    #[test]
    fn x_squared_under_x_exp_minus_x() {
        let order = 10;
        let f = &Series::variable(order) * &Series::exp_z(order).dilate(&int(-1));
        let g = Series::monomial(int(1), 2, order);
        let via_lagrange = lagrange_coefficients(&f, &g, order).unwrap();
        let via_compose = compose(&g, &revert(&f).unwrap()).unwrap();
        assert_eq!(via_lagrange, via_compose);
        // [z^n] x^2 = 2 n^(n-3) / (n-2)!
        for n in 2..=order as i64 {
            let want = int(2) * exact::pow_rational(&int(n), n - 3) / exact::factorial_rational(n as u64 - 2);
            assert_eq!(via_lagrange.coeffs()[n as usize], want, "n={n}");
        }
    }

    #[test]
    fn lagrange_rejects_bad_input() {
        let order = 4;
        let f = Series::one(order);
        assert!(lagrange_coefficients(&f, &Series::variable(order), order).is_err());
        let f = Series::monomial(int(1), 2, order);
        assert!(lagrange_coefficients(&f, &Series::variable(order), order).is_err());
    }

    #[test]
    fn bethe_forms_agree() {
        for r in [1u64, 2, 3, 5] {
            for n in 0..=20u64 {
                let f = bethe_factorial_form(r, n);
                assert_eq!(bethe_pochhammer_form(r, n), f, "r={r} n={n}");
                assert_eq!(bethe_binomial_form(&int(r as i64), n), f, "r={r} n={n}");
            }
        }
    }

    #[test]
    fn bethe_catalan_and_limits() {
        let s = bethe_series(&int(1), 4);
        assert_eq!(s.coeffs(), &[int(1), int(1), int(2), int(5), int(14)]);
        assert_eq!(bethe_gf(3.0, 0.0).unwrap(), 1.0);
        // Partial sums to 60 terms as the reference.
        let r = 2u64;
        let z = 0.1f64;
        let partial: f64 = (0..60).map(|n| exact::to_f64(&bethe_factorial_form(r, n)) * z.powi(n as i32)).sum();
        let closed = bethe_gf(2.0, 0.1).unwrap();
        assert!((partial - closed).abs() < 1e-12);
        assert!((closed - ((1.0 - 0.6f64.sqrt()) / 0.2).powi(2)).abs() < 1e-15);
        assert!(bethe_gf(1.0, 0.3).is_err());
        // Both sides of the small-z switch agree.
        let below = bethe_gf(2.5, 0.999 * SMALL_Z).unwrap();
        let above = ((1.0 - (1.0 - 4.0 * 0.999 * SMALL_Z).sqrt()) / (2.0 * 0.999 * SMALL_Z)).powf(2.5);
        assert!((below - above).abs() < 1e-11);
    }

    #[test]
    fn bethe_multiplicative_in_r() {
        let order = 15;
        for (r1, r2) in [(1, 1), (1, 2), (2, 3)] {
            let lhs = &bethe_series(&int(r1), order) * &bethe_series(&int(r2), order);
            assert_eq!(lhs, bethe_series(&int(r1 + r2), order));
        }
        let half = ratio(1, 2);
        assert_eq!(&bethe_series(&half, order) * &bethe_series(&half, order), bethe_series(&int(1), order));
    }

    #[test]
    fn central_shifted_relations() {
        let order = 15;
        assert_eq!(central_shifted_series(1, 3).coeffs(), &[int(1), int(3), int(10), int(35)]);
        let base = central_shifted_series(0, order);
        for r in 0..4u64 {
            assert_eq!(&bethe_series(&int(r as i64), order) * &base, central_shifted_series(r, order), "r={r}");
        }
        let z = 0.1f64;
        let partial: f64 =
            (0..60).map(|n| exact::choose(2 * n + 2, n).to_string().parse::<f64>().unwrap() * z.powi(n as i32)).sum();
        assert!((partial - central_shifted(2, z).unwrap()).abs() < 1e-10);
        assert!(((1.0 - 0.4f64).powf(-0.5) - central_shifted(0, z).unwrap()).abs() < 1e-15);
    }

    #[test]
    fn tree_closed_forms() {
        assert_eq!(tree_sum(-1, 0.5).unwrap(), 0.5);
        assert_eq!(tree_sum(0, 0.5).unwrap(), 1.0);
        for k in TREE_OFFSETS {
            assert_eq!(tree_sum(k, 0.0).unwrap(), 0.0);
        }
        assert!(tree_sum(0, 1.0).is_err());
        assert!(tree_sum(4, 0.2).is_err());
        // Direct partial sums of n^n/n! (x e^-x)^n at x = 1/2.
        let z = 0.5 * (-0.5f64).exp();
        let s: f64 = (1..=200u64).map(|n| exact::to_f64(&tree_coefficient(0, n)) * z.powi(n as i32)).sum();
        assert!((s - 1.0).abs() < 1e-12);
    }

    #[test]
    fn tree_function_inverts() {
        for x in [-0.25f64, -0.1, 0.0, 0.2, 0.5, 0.9] {
            let z = x * (-x).exp();
            assert!((tree_function(z).unwrap() - x).abs() < 1e-13, "x={x}");
        }
        assert!(tree_function(0.5).is_err());
    }

    #[test]
    fn derivative_ladder() {
        for k in -3..2 {
            for n in 1..=25u64 {
                assert_eq!(tree_coefficient(k + 1, n), int(n as i64) * tree_coefficient(k, n));
            }
        }
    }

    #[test]
    fn reversion_reproduces_tree_coefficients() {
        let order = 20;
        let f = &Series::variable(order) * &Series::exp_z(order).dilate(&int(-1));
        let g = revert(&f).unwrap();
        for n in 0..=order {
            assert_eq!(g.coeffs()[n], tree_coefficient(-1, n as u64));
        }
    }

    #[test]
    fn exact_partial_sum() {
        let x = 0.3f64;
        let z = exact::from_f64(x * (-x).exp()).unwrap();
        let s = exact::to_f64(&tree_partial_sum_exact(-2, &z, 200).unwrap());
        assert!((s - tree_sum(-2, x).unwrap()).abs() < 1e-12);
    }

    fn admissible() -> impl Strategy<Value = Series> {
        (prop::collection::vec(-4i64..=4, 10), 1i64..=3).prop_map(|(tail, lead)| {
            let mut c = vec![0, lead];
            c.extend_from_slice(&tail[..9]);
            Series::from_ints(&c, 10)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn lagrange_matches_revert(f in admissible()) {
            let via_lagrange = lagrange_coefficients(&f, &Series::variable(10), 10).unwrap();
            prop_assert_eq!(via_lagrange, revert(&f).unwrap());
        }
    }
}
