//! Term-wise calculus and elementary functions of series.

use num_traits::{One, Zero};

use super::{Series, SeriesError};
use crate::exact::{self, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CalculusOp {
    Derive,
    Integrate,
}

#[derive(Debug, Clone, PartialEq)]
pub enum ElementaryOp {
    Exp,
    Log,
    Pow(Rational),
}

pub fn calculus(f: &Series, op: CalculusOp) -> Series {
    match op {
        CalculusOp::Derive => f.derive(),
        CalculusOp::Integrate => f.integrate(),
    }
}

pub fn elementary(f: &Series, op: &ElementaryOp) -> Result<Series, SeriesError> {
    match op {
        ElementaryOp::Exp => f.exp(),
        ElementaryOp::Log => f.log(),
        ElementaryOp::Pow(r) => f.pow(r),
    }
}

impl Series {
    /// `a_n -> n a_n`, shifted down; the order drops by one. An order-0
    /// input has no known derivative coefficients and yields the order-0
    /// zero series.
    pub fn derive(&self) -> Series {
        if self.order() == 0 {
            return Series::zero(0);
        }
        Series::from_fn(self.order() - 1, |n| &self.coeffs()[n + 1] * exact::int(n as i64 + 1))
    }

    /// `a_n -> a_n/(n+1)`, shifted up with zero constant; order rises by one.
    pub fn integrate(&self) -> Series {
        Series::from_fn(self.order() + 1, |n| {
            if n == 0 {
                Rational::zero()
            } else {
                &self.coeffs()[n - 1] / exact::int(n as i64)
            }
        })
    }

    /// `exp(f)` for `f(0) = 0`, from `n h_n = sum_k k f_k h_{n-k}`.
    pub fn exp(&self) -> Result<Series, SeriesError> {
        self.expect_constant(Rational::zero(), "0")?;
        let f = self.coeffs();
        let mut h: Vec<Rational> = Vec::with_capacity(f.len());
        h.push(Rational::one());
        for n in 1..f.len() {
            let mut acc = Rational::zero();
            for k in 1..=n {
                if !f[k].is_zero() {
                    acc += &f[k] * exact::int(k as i64) * &h[n - k];
                }
            }
            h.push(acc / exact::int(n as i64));
        }
        Ok(Series::new(h))
    }

    /// `log(f)` for `f(0) = 1`, as the integral of `f'/f`.
    pub fn log(&self) -> Result<Series, SeriesError> {
        self.expect_constant(Rational::one(), "1")?;
        if self.order() == 0 {
            return Ok(Series::zero(0));
        }
        let quotient = self.derive().div(&self.truncate(self.order() - 1))?;
        Ok(quotient.integrate())
    }

    /// `f^r` for `f(0) = 1` and rational `r`, via the recurrence from
    /// `f h' = r f' h`: `n h_n = sum_{k=1}^n ((r+1)k - n) f_k h_{n-k}`.
    pub fn pow(&self, r: &Rational) -> Result<Series, SeriesError> {
        self.expect_constant(Rational::one(), "1")?;
        let f = self.coeffs();
        let r1 = r + Rational::one();
        let mut h: Vec<Rational> = Vec::with_capacity(f.len());
        h.push(Rational::one());
        for n in 1..f.len() {
            let mut acc = Rational::zero();
            for k in 1..=n {
                if !f[k].is_zero() {
                    let weight = &r1 * exact::int(k as i64) - exact::int(n as i64);
                    acc += weight * &f[k] * &h[n - k];
                }
            }
            h.push(acc / exact::int(n as i64));
        }
        Ok(Series::new(h))
    }

    /// `f^r` for a real exponent, using the exact rational value of `r`.
    pub fn pow_real(&self, r: f64) -> Result<Series, SeriesError> {
        let exact_r = exact::from_f64(r)
            .ok_or(SeriesError::BadConstantTerm { expected: "finite exponent", found: r.to_string() })?;
        self.pow(&exact_r)
    }

    fn expect_constant(&self, want: Rational, label: &'static str) -> Result<(), SeriesError> {
        if *self.constant_term() == want {
            Ok(())
        } else {
            Err(SeriesError::BadConstantTerm { expected: label, found: self.constant_term().to_string() })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{binomial, int, ratio};
    use proptest::prelude::*;

    #[test]
    fn z_times_derivative_of_geometric() {
        let d = calculus(&Series::geometric(8), CalculusOp::Derive);
        let zd = &Series::variable(7) * &d;
        assert_eq!(zd, Series::from_fn(7, |n| int(n as i64)));
    }

    #[test]
    fn integrate_geometric_is_minus_log() {
        let s = Series::geometric(6).integrate();
        assert_eq!(s, Series::from_fn(7, |n| if n == 0 { int(0) } else { ratio(1, n as i64) }));
    }

    #[test]
    fn integrate_after_derive_loses_constant() {
        let f = Series::from_ints(&[5, 1, -2, 7], 3);
        let back = f.derive().integrate();
        assert_eq!(back, Series::from_ints(&[0, 1, -2, 7], 3));
    }

    #[test]
    fn sqrt_one_plus_z() {
        let s = Series::from_ints(&[1, 1], 3).pow(&ratio(1, 2)).unwrap();
        assert_eq!(s, Series::new(vec![int(1), ratio(1, 2), ratio(-1, 8), ratio(1, 16)]));
    }

    #[test]
    fn one_minus_z_to_minus_one() {
        let s = elementary(&Series::from_ints(&[1, -1], 10), &ElementaryOp::Pow(int(-1))).unwrap();
        assert_eq!(s, Series::geometric(10));
    }

    #[test]
    fn log_of_exp_z() {
        let e = Series::variable(9).exp().unwrap();
        assert_eq!(e, Series::exp_z(9));
        assert_eq!(e.log().unwrap(), Series::variable(9));
    }

    #[test]
    fn real_exponent_uses_exact_dyadic() {
        let a = Series::from_ints(&[1, 1], 5).pow_real(0.5).unwrap();
        let b = Series::from_ints(&[1, 1], 5).pow(&ratio(1, 2)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn constant_term_preconditions() {
        let one_plus = Series::from_ints(&[1, 1], 4);
        assert!(matches!(one_plus.exp(), Err(SeriesError::BadConstantTerm { .. })));
        assert!(matches!(Series::variable(4).log(), Err(SeriesError::BadConstantTerm { .. })));
        assert!(matches!(Series::from_ints(&[2, 1], 4).pow(&int(3)), Err(SeriesError::BadConstantTerm { .. })));
    }

    fn unit_series() -> impl Strategy<Value = Series> {
        prop::collection::vec((-5i64..=5, 1i64..=4), 12).prop_map(|v| {
            let mut c = vec![int(1)];
            c.extend(v.into_iter().map(|(p, q)| ratio(p, q)));
            Series::new(c)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]
        #[test]
        fn derive_undoes_integrate(f in unit_series()) {
            prop_assert_eq!(f.integrate().derive(), f);
        }

        #[test]
        fn exp_log_inverse_pair(f in unit_series()) {
            prop_assert_eq!(f.log().unwrap().exp().unwrap(), f.clone());
            let g = &f - &Series::one(f.order());
            prop_assert_eq!(g.exp().unwrap().log().unwrap(), g);
        }

        #[test]
        fn binomial_series_product_formula(p in -7i64..=7, q in 1i64..=5) {
            let r = ratio(p, q);
            let s = Series::from_ints(&[1, 1], 12).pow(&r).unwrap();
            for n in 0..=12 {
                prop_assert_eq!(&s.coeffs()[n], &binomial(&r, n as u64));
            }
        }

        #[test]
        fn integer_pow_matches_powi(f in unit_series(), k in 0u32..5) {
            prop_assert_eq!(f.pow(&int(k as i64)).unwrap(), f.powi(k));
        }
    }
}
