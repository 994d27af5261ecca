//! Bernoulli and Euler numbers and polynomials.
//!
//! Both number sequences come from exact series long division:
//! `z/(e^z - 1) = sum B_n z^n/n!` and `sech w = sum E_n w^n/n!`.

use std::sync::OnceLock;

use num_traits::{One, Zero};

use crate::exact::{self, Rational};
use crate::series::Series;

/// Size of the shared table: enough for 200-term partial sums with headroom.
pub const SHARED_TABLE_SIZE: usize = 240;

#[derive(Debug, Clone)]
pub struct BernoulliTable {
    bernoulli: Vec<Rational>,
    euler: Vec<Rational>,
}

impl BernoulliTable {
    /// Exact `B_0..=B_k` and `E_0..=E_k`.
    pub fn new(k: usize) -> Self {
        // (e^z - 1)/z = sum z^n/(n+1)!
        let denom = Series::new(Series::exp_z(k + 1).coeffs()[1..].to_vec());
        let b_over_fact = denom.recip().expect("unit constant term");
        let bernoulli =
            b_over_fact.coeffs().iter().enumerate().map(|(n, c)| c * exact::factorial_rational(n as u64)).collect();

        let cosh =
            Series::from_fn(
                k,
                |n| if n % 2 == 0 { exact::factorial_rational(n as u64).recip() } else { Rational::zero() },
            );
        let sech = cosh.recip().expect("unit constant term");
        let euler = sech.coeffs().iter().enumerate().map(|(n, c)| c * exact::factorial_rational(n as u64)).collect();
        BernoulliTable { bernoulli, euler }
    }

    /// Process-wide table, built on first use and read-only afterwards.
    pub fn shared() -> &'static BernoulliTable {
        static TABLE: OnceLock<BernoulliTable> = OnceLock::new();
        TABLE.get_or_init(|| BernoulliTable::new(SHARED_TABLE_SIZE))
    }

    pub fn len(&self) -> usize {
        self.bernoulli.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bernoulli.is_empty()
    }

    pub fn bernoulli(&self, n: usize) -> &Rational {
        &self.bernoulli[n]
    }

    pub fn euler(&self, n: usize) -> &Rational {
        &self.euler[n]
    }

    pub fn bernoulli_numbers(&self) -> &[Rational] {
        &self.bernoulli
    }

    pub fn euler_numbers(&self) -> &[Rational] {
        &self.euler
    }
}

/// Table covering index `n`, falling back to a fresh build beyond the shared size.
fn table_for(n: usize) -> std::borrow::Cow<'static, BernoulliTable> {
    let shared = BernoulliTable::shared();
    if n < shared.len() {
        std::borrow::Cow::Borrowed(shared)
    } else {
        std::borrow::Cow::Owned(BernoulliTable::new(n))
    }
}

pub fn bernoulli_number(n: usize) -> Rational {
    table_for(n).bernoulli(n).clone()
}

pub fn euler_number(n: usize) -> Rational {
    table_for(n).euler(n).clone()
}

/// `B_n(a) = sum_k C(n,k) B_k a^(n-k)`, exactly.
pub fn bernoulli_poly_exact(n: usize, a: &Rational) -> Rational {
    let table = table_for(n);
    let mut acc = Rational::zero();
    let mut power = Rational::one();
    for k in (0..=n).rev() {
        acc += Rational::from_integer(exact::choose(n as u64, k as u64)) * table.bernoulli(k) * &power;
        power *= a;
    }
    acc
}

/// `E_n(a) = sum_k C(n,k) (E_k / 2^k) (a - 1/2)^(n-k)`, exactly.
pub fn euler_poly_exact(n: usize, a: &Rational) -> Rational {
    let table = table_for(n);
    let shift = a - exact::ratio(1, 2);
    let mut acc = Rational::zero();
    let mut power = Rational::one();
    for k in (0..=n).rev() {
        let ek = table.euler(k) / Rational::from_integer(exact::pow_u64(2, k as u32));
        acc += Rational::from_integer(exact::choose(n as u64, k as u64)) * ek * &power;
        power *= &shift;
    }
    acc
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BernoulliKind {
    BernoulliPoly,
    EulerPoly,
    BernoulliNumber,
    EulerNumber,
}

/// Double-precision front end; the polynomial argument is taken exactly.
pub fn bernoulli_euler(kind: BernoulliKind, n: usize, a: f64) -> f64 {
    let exact_a = exact::from_f64(a).unwrap_or_else(Rational::zero);
    let value = match kind {
        BernoulliKind::BernoulliPoly => bernoulli_poly_exact(n, &exact_a),
        BernoulliKind::EulerPoly => euler_poly_exact(n, &exact_a),
        BernoulliKind::BernoulliNumber => bernoulli_number(n),
        BernoulliKind::EulerNumber => euler_number(n),
    };
    exact::to_f64(&value)
}

/// `sum_n B_n(a) z^n/n!` to the given order.
pub fn bernoulli_gf_series(a: &Rational, order: usize) -> Series {
    Series::from_fn(order, |n| bernoulli_poly_exact(n, a) / exact::factorial_rational(n as u64))
}

/// `sum_n E_n(a) z^n/n!` to the given order.
pub fn euler_gf_series(a: &Rational, order: usize) -> Series {
    Series::from_fn(order, |n| euler_poly_exact(n, a) / exact::factorial_rational(n as u64))
}
