//! Truncated formal power series with exact rational coefficients.
//!
//! A [`Series`] of order `N` stores `a_0..=a_N`; coefficients past `N` are
//! unknown rather than zero. Binary operations keep the smaller order, so a
//! result never claims more than its inputs determine.

mod calculus;
mod compose;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use thiserror::Error;

use crate::exact::{self, Rational};

pub use calculus::{calculus, elementary, CalculusOp, ElementaryOp};
pub use compose::{compose, revert};

/// Order used by the convenience constructors when callers do not pick one.
pub const DEFAULT_ORDER: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("division by a series whose constant term is zero")]
    DivisionByNonUnit,
    #[error("inner series of a composition must have zero constant term")]
    NonzeroConstantTerm,
    #[error("series is not invertible: need a_0 = 0 and a_1 != 0")]
    NotInvertible,
    #[error("constant term {found} not allowed here (expected {expected})")]
    BadConstantTerm { expected: &'static str, found: String },
    #[error("coefficient index {index} beyond truncation order {order}")]
    IndexBeyondOrder { index: usize, order: usize },
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Series {
    coeffs: Vec<Rational>,
}

impl Series {
    /// Builds a series from `a_0..=a_N`; the order is `coeffs.len() - 1`.
    ///
    /// Panics on an empty vector, which would have no defined order.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least the constant coefficient");
        Series { coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> Rational) -> Self {
        Series::new((0..=order).map(f).collect())
    }

    /// Convenience for small literal series, e.g. `Series::from_ints(&[1, -1], 4)`.
    /// Entries beyond the slice are zero up to `order`.
    pub fn from_ints(values: &[i64], order: usize) -> Self {
        Series::from_fn(order, |n| values.get(n).map_or_else(Rational::zero, |&v| exact::int(v)))
    }

    pub fn zero(order: usize) -> Self {
        Series::from_fn(order, |_| Rational::zero())
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        let mut s = Series::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(order: usize) -> Self {
        Series::constant(Rational::one(), order)
    }

    /// `c z^k`, or the zero series when `k > order`.
    pub fn monomial(c: Rational, k: usize, order: usize) -> Self {
        let mut s = Series::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// The series `z`.
    pub fn variable(order: usize) -> Self {
        Series::monomial(Rational::one(), 1, order)
    }

    /// `1/(1-z)`.
    pub fn geometric(order: usize) -> Self {
        Series::from_fn(order, |_| Rational::one())
    }

    /// `e^z`.
    pub fn exp_z(order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut term = Rational::one();
        for n in 0..=order {
            if n > 0 {
                term /= exact::int(n as i64);
            }
            coeffs.push(term.clone());
        }
        Series::new(coeffs)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    pub fn coefficient(&self, n: usize) -> Result<&Rational, SeriesError> {
        self.coeffs.get(n).ok_or(SeriesError::IndexBeyondOrder { index: n, order: self.order() })
    }

    pub fn constant_term(&self) -> &Rational {
        &self.coeffs[0]
    }

    /// Drops coefficients above `order`. Asking for a higher order than is
    /// known keeps the current order, since unknown terms cannot be invented.
    pub fn truncate(&self, order: usize) -> Series {
        let keep = order.min(self.order());
        Series::new(self.coeffs[..=keep].to_vec())
    }

    pub fn scale(&self, c: &Rational) -> Series {
        Series::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// `f(cz)`.
    pub fn dilate(&self, c: &Rational) -> Series {
        let mut power = Rational::one();
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(n, a)| {
                if n > 0 {
                    power *= c;
                }
                a * &power
            })
            .collect();
        Series::new(coeffs)
    }

    /// Multiplies by `z^k`, raising the order by `k`.
    pub fn shift_up(&self, k: usize) -> Series {
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Series::new(coeffs)
    }

    /// Divides by `z^k`; the low coefficients must vanish. Order drops by `k`.
    pub fn shift_down(&self, k: usize) -> Result<Series, SeriesError> {
        if k > self.order() {
            return Err(SeriesError::IndexBeyondOrder { index: k, order: self.order() });
        }
        if self.coeffs[..k].iter().any(|a| !a.is_zero()) {
            return Err(SeriesError::DivisionByNonUnit);
        }
        Ok(Series::new(self.coeffs[k..].to_vec()))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Truncated long division `self / g`.
    pub fn div(&self, g: &Series) -> Result<Series, SeriesError> {
        if g.coeffs[0].is_zero() {
            return Err(SeriesError::DivisionByNonUnit);
        }
        let order = self.order().min(g.order());
        Ok(Series::new(div_trunc(&self.coeffs, &g.coeffs, order + 1)))
    }

    pub fn recip(&self) -> Result<Series, SeriesError> {
        Series::one(self.order()).div(self)
    }

    /// Integer power by repeated squaring; order is preserved.
    pub fn powi(&self, n: u32) -> Series {
        let len = self.coeffs.len();
        let mut result = vec![Rational::one()];
        let mut base = self.coeffs.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                result = mul_trunc(&result, &base, len);
            }
            e >>= 1;
            if e > 0 {
                base = mul_trunc(&base, &base, len);
            }
        }
        result.resize(len, Rational::zero());
        Series::new(result)
    }

    /// Horner evaluation of `sum_{n<=terms} a_n z^n` in double precision.
    pub fn eval_partial(&self, z: f64, terms: usize) -> Result<f64, SeriesError> {
        if terms > self.order() {
            return Err(SeriesError::IndexBeyondOrder { index: terms, order: self.order() });
        }
        let floats: Vec<f64> = self.coeffs[..=terms].iter().map(exact::to_f64).collect();
        Ok(horner(&floats, z))
    }

    pub fn to_f64_coeffs(&self) -> Vec<f64> {
        self.coeffs.iter().map(exact::to_f64).collect()
    }
}

/// Evaluates `sum c_n z^n` by Horner's rule.
pub fn horner(coeffs: &[f64], z: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, c| acc * z + c)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn arith(f: &Series, g: &Series, op: ArithOp) -> Result<Series, SeriesError> {
    match op {
        ArithOp::Add => Ok(f + g),
        ArithOp::Sub => Ok(f - g),
        ArithOp::Mul => Ok(f * g),
        ArithOp::Div => f.div(g),
    }
}

pub fn coefficient(f: &Series, n: usize) -> Result<Rational, SeriesError> {
    f.coefficient(n).cloned()
}

pub fn eval_partial(f: &Series, z: f64, terms: usize) -> Result<f64, SeriesError> {
    f.eval_partial(z, terms)
}

pub(crate) fn mul_trunc(a: &[Rational], b: &[Rational], len: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); len];
    for (i, ai) in a.iter().enumerate().take(len) {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(len - i) {
            if !bj.is_zero() {
                out[i + j] += ai * bj;
            }
        }
    }
    out
}

/// `a / b` to `len` coefficients; `b[0]` must be nonzero.
pub(crate) fn div_trunc(a: &[Rational], b: &[Rational], len: usize) -> Vec<Rational> {
    let inv_b0 = b[0].recip();
    let mut out: Vec<Rational> = Vec::with_capacity(len);
    for n in 0..len {
        let mut acc = a.get(n).cloned().unwrap_or_else(Rational::zero);
        for k in 1..=n.min(b.len() - 1) {
            if !b[k].is_zero() {
                acc -= &b[k] * &out[n - k];
            }
        }
        out.push(acc * &inv_b0);
    }
    out
}

impl Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        let len = self.coeffs.len().min(rhs.coeffs.len());
        Series::new((0..len).map(|n| &self.coeffs[n] + &rhs.coeffs[n]).collect())
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        let len = self.coeffs.len().min(rhs.coeffs.len());
        Series::new((0..len).map(|n| &self.coeffs[n] - &rhs.coeffs[n]).collect())
    }
}

impl Mul for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        let len = self.coeffs.len().min(rhs.coeffs.len());
        Series::new(mul_trunc(&self.coeffs, &rhs.coeffs, len))
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        Series::new(self.coeffs.iter().map(|a| -a).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Series {
            type Output = Series;
            fn $m(self, rhs: Series) -> Series {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Series> for Series {
            type Output = Series;
            fn $m(self, rhs: &Series) -> Series {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Series {
    type Output = Series;
    fn neg(self) -> Series {
        -&self
    }
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Series[")?;
        for (n, a) in self.coeffs.iter().enumerate() {
            if n > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "; O(z^{})]", self.order() + 1)
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match n {
                0 => write!(f, "{a}")?,
                1 => write!(f, "({a})z")?,
                _ => write!(f, "({a})z^{n}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(z^{})", self.order() + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, ratio};
    use proptest::prelude::*;

    #[test]
    fn difference_of_squares() {
        let a = Series::from_ints(&[1, 1], 4);
        let b = Series::from_ints(&[1, -1], 4);
        assert_eq!(&a * &b, Series::from_ints(&[1, 0, -1], 4));
    }

    #[test]
    fn one_over_one_minus_z_is_geometric() {
        let one = Series::one(4);
        let q = one.div(&Series::from_ints(&[1, -1], 4)).unwrap();
        assert_eq!(q, Series::from_ints(&[1, 1, 1, 1, 1], 4));
    }

    #[test]
    fn product_with_reciprocal_is_one() {
        // Long division by hand: 1/(1+2z+3z^2) = 1 - 2z + z^2 + ...
        let f = Series::from_ints(&[1, 2, 3], 2);
        let inv = Series::one(2).div(&f).unwrap();
        assert_eq!(inv, Series::from_ints(&[1, -2, 1], 2));
        assert_eq!(&f * &inv, Series::one(2));
    }

    #[test]
    fn division_by_non_unit_fails() {
        let z = Series::variable(5);
        assert_eq!(Series::one(5).div(&z), Err(SeriesError::DivisionByNonUnit));
        assert_eq!(arith(&Series::one(5), &z, ArithOp::Div), Err(SeriesError::DivisionByNonUnit));
    }

    #[test]
    fn orders_take_minimum() {
        let a = Series::geometric(7);
        let b = Series::geometric(3);
        assert_eq!((&a + &b).order(), 3);
        assert_eq!((&a * &b).order(), 3);
        assert_eq!(a.div(&b).unwrap().order(), 3);
        assert_eq!(a.truncate(10).order(), 7);
    }

    #[test]
    fn coefficient_bounds() {
        let g = Series::geometric(5);
        assert_eq!(coefficient(&g, 5).unwrap(), int(1));
        assert_eq!(g.coefficient(6), Err(SeriesError::IndexBeyondOrder { index: 6, order: 5 }));
    }

    #[test]
    fn central_binomial_coefficient_from_power() {
        // (1-4z)^(-1/2): coefficient 3 is C(6,3) = 20.
        let base = Series::from_ints(&[1, -4], 6);
        let s = base.pow(&ratio(-1, 2)).unwrap();
        assert_eq!(coefficient(&s, 3).unwrap(), int(20));
    }

    #[test]
    fn eval_partial_geometric_and_exp() {
        let g = Series::geometric(50);
        assert!((g.eval_partial(0.5, 50).unwrap() - 2.0).abs() < 1e-12);
        let e = Series::exp_z(30);
        assert!((e.eval_partial(1.0, 30).unwrap() - std::f64::consts::E).abs() < 1e-12);
        let f = Series::from_ints(&[7, 3, 2], 2);
        assert_eq!(f.eval_partial(0.0, 2).unwrap(), 7.0);
        assert!(g.eval_partial(0.5, 51).is_err());
    }

    #[test]
    fn powi_matches_repeated_product() {
        let f = Series::from_ints(&[1, 2, -1, 3], 9);
        let mut p = Series::one(9);
        for k in 0..6 {
            assert_eq!(f.powi(k), p);
            p = &p * &f;
        }
    }

    #[test]
    fn shift_and_dilate() {
        let g = Series::geometric(4);
        assert_eq!(g.shift_up(2).order(), 6);
        assert_eq!(g.shift_up(2).shift_down(2).unwrap(), g);
        assert!(g.shift_down(1).is_err());
        let d = g.dilate(&int(-1));
        assert_eq!(d, Series::from_ints(&[1, -1, 1, -1, 1], 4));
    }

    fn small_series(order: usize) -> impl Strategy<Value = Series> {
        prop::collection::vec((-9i64..=9, 1i64..=5), order + 1)
            .prop_map(|v| Series::new(v.into_iter().map(|(p, q)| ratio(p, q)).collect()))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]
        #[test]
        fn ring_axioms(a in small_series(12), b in small_series(12), c in small_series(12)) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a - &b) + &b, a.clone());
        }

        #[test]
        fn division_inverts_multiplication(a in small_series(10), b in small_series(10)) {
            prop_assume!(!b.constant_term().is_zero());
            let q = a.div(&b).unwrap();
            prop_assert_eq!(&q * &b, a);
        }
    }
}
