//! Exact rational helpers shared by the series, catalog and tree modules.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational number, always normalized with a positive denominator.
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

pub fn factorial_rational(n: u64) -> Rational {
    Rational::from_integer(factorial(n))
}

/// `base^exp` for a non-negative integer base.
pub fn pow_u64(base: u64, exp: u32) -> BigInt {
    num_traits::pow(BigInt::from(base), exp as usize)
}

/// Rational power with a signed integer exponent; `0^0 = 1`.
pub fn pow_rational(base: &Rational, exp: i64) -> Rational {
    if exp >= 0 {
        num_traits::pow(base.clone(), exp as usize)
    } else {
        num_traits::pow(base.recip(), (-exp) as usize)
    }
}

/// Generalized binomial coefficient `r(r-1)...(r-n+1)/n!` as a finite product.
pub fn binomial(r: &Rational, n: u64) -> Rational {
    let mut acc = Rational::one();
    for k in 0..n {
        acc = acc * (r - int(k as i64)) / int(k as i64 + 1);
    }
    acc
}

/// Rising factorial `z(z+1)...(z+n-1)`; `(z)_0 = 1`.
pub fn pochhammer(z: &Rational, n: u64) -> Rational {
    let mut acc = Rational::one();
    for k in 0..n {
        acc *= z + int(k as i64);
    }
    acc
}

/// Ordinary integer binomial coefficient `m!/(n!(m-n)!)`, zero when `n > m`.
pub fn choose(m: u64, n: u64) -> BigInt {
    if n > m {
        return BigInt::zero();
    }
    let n = n.min(m - n);
    let mut acc = BigUint::one();
    for k in 0..n {
        acc = acc * BigUint::from(m - k) / BigUint::from(k + 1);
    }
    BigInt::from(acc)
}

/// Nearest `f64` to an exact rational. Large numerators and denominators are
/// reduced by shifting before the final division so no intermediate overflows.
pub fn to_f64(q: &Rational) -> f64 {
    if q.is_zero() {
        return 0.0;
    }
    if let (Some(n), Some(d)) = (q.numer().to_f64(), q.denom().to_f64()) {
        if n.is_finite() && d.is_finite() && n.abs() < 9.007_199_254_740_992e15 && d < 9.007_199_254_740_992e15 {
            return n / d;
        }
    }
    let negative = q.is_negative();
    let num = q.numer().abs().to_biguint().expect("abs is non-negative");
    let den = q.denom().to_biguint().expect("denominator is positive");
    // Scale so the integer quotient carries 64+ significant bits.
    let shift = den.bits() as i64 - num.bits() as i64 + 66;
    let (n2, d2) = if shift >= 0 { (num << shift as u64, den) } else { (num, den << (-shift) as u64) };
    let quotient = n2 / d2;
    let value = biguint_to_f64_scaled(&quotient, -shift);
    if negative {
        -value
    } else {
        value
    }
}

/// `m * 2^exp` with correct rounding of the leading bits of `m`.
fn biguint_to_f64_scaled(m: &BigUint, exp: i64) -> f64 {
    let bits = m.bits() as i64;
    let drop = (bits - 64).max(0);
    let top = (m >> drop as u64).to_u64().expect("fits in 64 bits");
    // Sticky bit keeps round-to-nearest honest on the second rounding.
    let sticky = if drop > 0 && (m - (BigUint::from(top) << drop as u64)) != BigUint::zero() { 1 } else { 0 };
    let mut value = (top | sticky) as f64;
    let mut e = exp + drop;
    while e > 1000 {
        value *= 2f64.powi(1000);
        e -= 1000;
    }
    while e < -1000 {
        value *= 2f64.powi(-1000);
        e += 1000;
    }
    value * 2f64.powi(e as i32)
}

/// Exact rational value of a finite `f64`.
pub fn from_f64(x: f64) -> Option<Rational> {
    Rational::from_float(x)
}

/// Formats `p/q`, or `p` when the denominator is one.
pub fn format_rational(q: &Rational) -> String {
    q.to_string()
}

/// Parses `p`, `-p`, or `p/q`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                None
            } else {
                Some(Rational::new(p, q))
            }
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}
