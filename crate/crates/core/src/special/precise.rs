//! Binary fixed-point arithmetic with a few hundred bits, for quantities that
//! double precision cannot resolve (Stirling remainders below 1e-18, digits of
//! Euler's constant).

use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use num_bigint::{BigInt, Sign};
use num_traits::{One, Signed, Zero};

use crate::exact::{self, Rational};

/// Fractional bits carried by every [`Fixed`].
pub const FRACTION_BITS: u64 = 320;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Fixed(BigInt);

impl Fixed {
    pub fn zero() -> Fixed {
        Fixed(BigInt::zero())
    }

    pub fn from_int(n: i64) -> Fixed {
        Fixed(BigInt::from(n) << FRACTION_BITS)
    }

    pub fn from_rational(q: &Rational) -> Fixed {
        Fixed((q.numer() << FRACTION_BITS) / q.denom())
    }

    pub fn div_int(&self, d: &BigInt) -> Fixed {
        Fixed(&self.0 / d)
    }

    pub fn to_f64(&self) -> f64 {
        let denom = BigInt::one() << FRACTION_BITS;
        exact::to_f64(&Rational::new(self.0.clone(), denom))
    }

    /// Natural log of a positive integer.
    pub fn ln_int(n: &BigInt) -> Fixed {
        assert!(n.sign() == Sign::Plus, "ln of non-positive integer");
        let bits = n.bits();
        // n = m 2^e with m in [1, 2); fold m into [1/sqrt2, sqrt2) for a faster series.
        let mut e = bits as i64 - 1;
        let mut m = Fixed(if bits > FRACTION_BITS + 1 {
            n >> (bits - 1 - FRACTION_BITS)
        } else {
            n << (FRACTION_BITS + 1 - bits)
        });
        let sqrt2 = Fixed::from_rational(&exact::ratio(14_142_135_623_731, 10_000_000_000_000));
        if m > sqrt2 {
            m = Fixed(m.0 >> 1);
            e += 1;
        }
        let ln2 = ln2();
        &(ln2 * &Fixed::from_int(e)) + &ln_near_one(&m)
    }

    /// Natural log of a positive fixed-point value.
    pub fn ln(&self) -> Fixed {
        let bits = Fixed::from_int(FRACTION_BITS as i64);
        &Fixed::ln_int(&self.0) - &(ln2() * &bits)
    }

    pub fn ln_rational(q: &Rational) -> Fixed {
        &Fixed::ln_int(q.numer()) - &Fixed::ln_int(q.denom())
    }
}

/// `ln m` for `m` near one, as `2 atanh((m-1)/(m+1))`.
fn ln_near_one(m: &Fixed) -> Fixed {
    let one = Fixed::from_int(1);
    let y = (m - &one).div_fixed(&(m + &one));
    let y2 = &y * &y;
    let mut term = y.clone();
    let mut sum = Fixed::zero();
    let mut k: i64 = 0;
    while !term.0.is_zero() {
        sum = &sum + &term.div_int(&BigInt::from(2 * k + 1));
        term = &term * &y2;
        k += 1;
    }
    &sum + &sum
}

impl Fixed {
    fn div_fixed(&self, rhs: &Fixed) -> Fixed {
        Fixed((&self.0 << FRACTION_BITS) / &rhs.0)
    }
}

/// `atanh(1/k)` for an integer `k > 1`.
fn atanh_inv(k: i64) -> Fixed {
    let k2 = BigInt::from(k * k);
    let mut power = Fixed::from_int(1).div_int(&BigInt::from(k));
    let mut sum = Fixed::zero();
    let mut j: i64 = 0;
    while !power.0.is_zero() {
        sum = &sum + &power.div_int(&BigInt::from(2 * j + 1));
        power = power.div_int(&k2);
        j += 1;
    }
    sum
}

/// `atan(1/k)` for an integer `k > 1`.
fn atan_inv(k: i64) -> Fixed {
    let k2 = BigInt::from(k * k);
    let mut power = Fixed::from_int(1).div_int(&BigInt::from(k));
    let mut sum = Fixed::zero();
    let mut j: i64 = 0;
    while !power.0.is_zero() {
        let term = power.div_int(&BigInt::from(2 * j + 1));
        sum = if j % 2 == 0 { &sum + &term } else { &sum - &term };
        power = power.div_int(&k2);
        j += 1;
    }
    sum
}

pub fn ln2() -> Fixed {
    static LN2: OnceLock<Fixed> = OnceLock::new();
    LN2.get_or_init(|| {
        let a = atanh_inv(3);
        &a + &a
    })
    .clone()
}

/// Machin: `pi = 16 atan(1/5) - 4 atan(1/239)`.
pub fn pi() -> Fixed {
    static PI: OnceLock<Fixed> = OnceLock::new();
    PI.get_or_init(|| {
        let a = atan_inv(5) * &Fixed::from_int(16);
        let b = atan_inv(239) * &Fixed::from_int(4);
        &a - &b
    })
    .clone()
}

impl Add for &Fixed {
    type Output = Fixed;
    fn add(self, rhs: &Fixed) -> Fixed {
        Fixed(&self.0 + &rhs.0)
    }
}

impl Sub for &Fixed {
    type Output = Fixed;
    fn sub(self, rhs: &Fixed) -> Fixed {
        Fixed(&self.0 - &rhs.0)
    }
}

impl Mul for &Fixed {
    type Output = Fixed;
    fn mul(self, rhs: &Fixed) -> Fixed {
        // Truncate toward zero so repeated products of small negatives reach zero.
        let product = &self.0 * &rhs.0;
        if product.sign() == Sign::Minus {
            Fixed(-((-product) >> FRACTION_BITS))
        } else {
            Fixed(product >> FRACTION_BITS)
        }
    }
}

impl Mul<&Fixed> for Fixed {
    type Output = Fixed;
    fn mul(self, rhs: &Fixed) -> Fixed {
        &self * rhs
    }
}

impl Neg for Fixed {
    type Output = Fixed;
    fn neg(self) -> Fixed {
        Fixed(-self.0)
    }
}

impl Fixed {
    pub fn abs(&self) -> Fixed {
        Fixed(self.0.abs())
    }

    /// Decimal expansion truncated (not rounded) to `digits` places.
    pub fn to_decimal(&self, digits: usize) -> String {
        let scaled: BigInt = (self.0.abs() * BigInt::from(10).pow(digits as u32)) >> FRACTION_BITS;
        let text = format!("{:0>width$}", scaled.to_string(), width = digits + 1);
        let (int_part, frac) = text.split_at(text.len() - digits);
        let sign = if self.0.sign() == Sign::Minus { "-" } else { "" };
        format!("{sign}{int_part}.{frac}")
    }
}
