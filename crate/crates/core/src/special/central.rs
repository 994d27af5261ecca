//! The central binomial ratio `C(2n, n) / 4^n`, its equivalent product forms,
//! and its large-`n` expansion.

use std::f64::consts::PI;

use num_traits::{One, Zero};

use super::bernoulli::bernoulli_number;
use super::gamma::gamma;
use crate::exact::{self, Rational};
use crate::series::Series;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CentralBinomialKind {
    /// Product `prod_{k<=n} (2k-1)/(2k)`.
    Exact,
    /// `(pi n)^(-1/2)` times the first `terms` bracket terms in `1/n`.
    Asymptotic(usize),
    /// `(pi n)^(-1/2) exp(sum_{j<=terms} e_j n^(1-2j))`.
    Exponential(usize),
}

pub fn central_binomial(kind: CentralBinomialKind, n: u64) -> f64 {
    match kind {
        CentralBinomialKind::Exact => (1..=n).fold(1.0, |acc, k| acc * (2 * k - 1) as f64 / (2 * k) as f64),
        CentralBinomialKind::Asymptotic(terms) => central_binomial_asymptotic(terms, n as f64),
        CentralBinomialKind::Exponential(terms) => central_binomial_exponential(terms, n as f64),
    }
}

/// `C(2n, n) / 4^n` as an exact rational.
pub fn central_binomial_rational(n: u64) -> Rational {
    Rational::new(exact::choose(2 * n, n), exact::pow_u64(4, n as u32))
}

/// `(2n-1)!! / (2^n n!)`.
pub fn double_factorial_form(n: u64) -> Rational {
    let odd = (1..=n).fold(num_bigint::BigInt::one(), |acc, k| acc * (2 * k - 1));
    Rational::new(odd, exact::pow_u64(2, n as u32) * exact::factorial(n))
}

/// `(2n)! / (2^(2n) (n!)^2)`.
pub fn factorial_form(n: u64) -> Rational {
    let f = exact::factorial(n);
    Rational::new(exact::factorial(2 * n), exact::pow_u64(2, 2 * n as u32) * &f * &f)
}

/// `(2n-1)! / (2^(2n-1) n! (n-1)!)`, `n >= 1`.
pub fn odd_factorial_form(n: u64) -> Rational {
    assert!(n >= 1, "odd factorial form needs n >= 1");
    Rational::new(
        exact::factorial(2 * n - 1),
        exact::pow_u64(2, (2 * n - 1) as u32) * exact::factorial(n) * exact::factorial(n - 1),
    )
}

/// `(1/2)_n / n!`.
pub fn pochhammer_form(n: u64) -> Rational {
    exact::pochhammer(&exact::ratio(1, 2), n) / exact::factorial_rational(n)
}

/// `(-1)^n C(-1/2, n)`.
pub fn negative_half_binomial_form(n: u64) -> Rational {
    let b = exact::binomial(&exact::ratio(-1, 2), n);
    if n.is_multiple_of(2) {
        b
    } else {
        -b
    }
}

/// `Gamma(n + 1/2) / (Gamma(1/2) n!)` in floating point.
pub fn gamma_ratio_form(n: u64) -> f64 {
    let g = gamma(n as f64 + 0.5).expect("positive argument") / PI.sqrt();
    g / gamma(n as f64 + 1.0).expect("positive argument")
}

/// Coefficient of `n^(1-2j)` in `ln[sqrt(pi n) C(2n,n)/4^n]`:
/// `B_2j (2^(1-2j) - 2) / (2j (2j-1))`, i.e. `-1/8, 1/192, -1/640, ...`.
pub fn exponent_coefficient(j: usize) -> Rational {
    assert!(j >= 1);
    let two_j = 2 * j as i64;
    let factor = exact::pow_rational(&exact::int(2), 1 - two_j) - exact::int(2);
    bernoulli_number(2 * j) * factor / exact::int(two_j * (two_j - 1))
}

/// Bracket coefficients `1, -1/8, 1/128, 5/1024, ...` in powers of `1/n`,
/// from exponentiating the exponent series exactly.
pub fn asymptotic_bracket(terms: usize) -> Vec<Rational> {
    if terms == 0 {
        return Vec::new();
    }
    let order = terms - 1;
    let exponent =
        Series::from_fn(order, |k| if k % 2 == 1 { exponent_coefficient(k.div_ceil(2)) } else { Rational::zero() });
    exponent.exp().expect("zero constant term").into_coeffs()
}

pub fn central_binomial_asymptotic(terms: usize, n: f64) -> f64 {
    let coeffs: Vec<f64> = asymptotic_bracket(terms).iter().map(exact::to_f64).collect();
    crate::series::horner(&coeffs, 1.0 / n) / (PI * n).sqrt()
}

pub fn central_binomial_exponential(terms: usize, n: f64) -> f64 {
    let exponent: f64 = (1..=terms).map(|j| exact::to_f64(&exponent_coefficient(j)) * n.powi(1 - 2 * j as i32)).sum();
    exponent.exp() / (PI * n).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;

    #[test]
    fn small_values() {
        assert_eq!(central_binomial(CentralBinomialKind::Exact, 1), 0.5);
        assert_eq!(central_binomial_rational(1), ratio(1, 2));
        assert_eq!(central_binomial_rational(3), ratio(5, 16));
    }

    #[test]
    fn equality_chain_is_exact() {
        for n in 1..=10 {
            let c = central_binomial_rational(n);
            assert_eq!(double_factorial_form(n), c, "n={n}");
            assert_eq!(factorial_form(n), c);
            assert_eq!(odd_factorial_form(n), c);
            assert_eq!(pochhammer_form(n), c);
            assert_eq!(negative_half_binomial_form(n), c);
            assert!((gamma_ratio_form(n) - exact::to_f64(&c)).abs() < 1e-14);
        }
    }

    #[test]
    fn coefficients() {
        assert_eq!(exponent_coefficient(1), ratio(-1, 8));
        assert_eq!(exponent_coefficient(2), ratio(1, 192));
        assert_eq!(exponent_coefficient(3), ratio(-1, 640));
        assert_eq!(asymptotic_bracket(4), vec![exact::int(1), ratio(-1, 8), ratio(1, 128), ratio(5, 1024)]);
    }

    #[test]
    fn asymptotic_accuracy_at_one_hundred() {
        let exact_value = exact::to_f64(&central_binomial_rational(100));
        let rel = central_binomial_asymptotic(4, 100.0) / exact_value - 1.0;
        assert!(rel.abs() <= 1e-9, "{rel:e}");
        let rel = central_binomial_exponential(3, 100.0) / exact_value - 1.0;
        assert!(rel.abs() <= 1e-12, "{rel:e}");
    }
}
