//! Adaptive Gauss–Kronrod (7/15-point) integration, used as an independent
//! oracle for the closed forms in the catalog.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use thiserror::Error;

/// Default absolute error target.
pub const ABS_TOL: f64 = 1e-11;
/// Default relative error target, applied when it is looser than [`ABS_TOL`].
pub const REL_TOL: f64 = 1e-12;
const MAX_INTERVALS: usize = 20_000;

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_728_1,
];
/// Gauss weights for the odd-indexed Kronrod nodes (plus the centre).
const WG: [f64; 4] =
    [0.129_484_966_168_869_7, 0.279_705_391_489_276_7, 0.381_830_050_505_118_9, 0.417_959_183_673_469_4];

#[derive(Debug, Clone, PartialEq, Error)]
pub enum QuadratureError {
    #[error("no convergence after {intervals} subintervals: estimate {estimate}, error {error:e}")]
    NonConvergence { estimate: f64, error: f64, intervals: usize },
    #[error("integrand is not finite at t = {0}")]
    NonFinite(f64),
    #[error("invalid interval [{0}, {1}]")]
    InvalidInterval(f64, f64),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quadrature {
    pub value: f64,
    pub error: f64,
    pub intervals: usize,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub abs: f64,
    pub rel: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance { abs: ABS_TOL, rel: REL_TOL }
    }
}

struct Segment {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.error.total_cmp(&other.error) == Ordering::Equal
    }
}
impl Eq for Segment {}
impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn kronrod<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Result<Segment, QuadratureError> {
    let centre = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let eval = |t: f64| {
        let v = f(t);
        if v.is_finite() {
            Ok(v)
        } else {
            Err(QuadratureError::NonFinite(t))
        }
    };
    let fc = eval(centre)?;
    let mut kronrod = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    for (i, x) in XGK[..7].iter().enumerate() {
        let dx = half * x;
        let pair = eval(centre - dx)? + eval(centre + dx)?;
        kronrod += WGK[i] * pair;
        if i % 2 == 1 {
            gauss += WG[i / 2] * pair;
        }
    }
    Ok(Segment { a, b, value: kronrod * half, error: ((kronrod - gauss) * half).abs() })
}

/// Integrate `f` over the finite interval `[a, b]` with the default tolerance.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64) -> Result<Quadrature, QuadratureError> {
    integrate_with(f, a, b, Tolerance::default())
}

pub fn integrate_with<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: Tolerance) -> Result<Quadrature, QuadratureError> {
    if !(a.is_finite() && b.is_finite()) {
        return Err(QuadratureError::InvalidInterval(a, b));
    }
    if a == b {
        return Ok(Quadrature { value: 0.0, error: 0.0, intervals: 0 });
    }
    if a > b {
        let q = integrate_with(f, b, a, tol)?;
        return Ok(Quadrature { value: -q.value, ..q });
    }
    let first = kronrod(&f, a, b)?;
    let mut value = first.value;
    let mut error = first.error;
    let mut heap = BinaryHeap::from([first]);
    loop {
        if error <= tol.abs.max(tol.rel * value.abs()) {
            return Ok(Quadrature { value, error, intervals: heap.len() });
        }
        let worst = heap.pop().expect("heap is never empty");
        let mid = 0.5 * (worst.a + worst.b);
        if heap.len() >= MAX_INTERVALS || mid <= worst.a || mid >= worst.b {
            heap.push(worst);
            return Err(QuadratureError::NonConvergence { estimate: value, error, intervals: heap.len() });
        }
        let left = kronrod(&f, worst.a, mid)?;
        let right = kronrod(&f, mid, worst.b)?;
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        // Re-sum occasionally so cancellation in the running totals does not drift.
        if heap.len() % 64 == 0 {
            value = heap.iter().map(|s| s.value).sum();
            error = heap.iter().map(|s| s.error).sum();
        }
    }
}

/// `int_a^inf f(t) dt` through `t = a + u/(1-u)`.
pub fn integrate_to_infinity<F: Fn(f64) -> f64>(f: F, a: f64) -> Result<Quadrature, QuadratureError> {
    integrate_to_infinity_with(f, a, Tolerance::default())
}

pub fn integrate_to_infinity_with<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    tol: Tolerance,
) -> Result<Quadrature, QuadratureError> {
    integrate_with(
        |u| {
            let w = 1.0 - u;
            let t = a + u / w;
            let v = f(t);
            // Integrands decaying to zero at infinity map to zero at u = 1.
            if v == 0.0 {
                0.0
            } else {
                v / (w * w)
            }
        },
        0.0,
        1.0,
        tol,
    )
}

/// `int_a^b f(t) dt` through `t = a + u^2`, which removes an integrable
/// `(t - a)^(-1/2)` endpoint singularity.
pub fn integrate_sqrt_start<F: Fn(f64) -> f64>(f: F, a: f64, b: f64) -> Result<Quadrature, QuadratureError> {
    integrate_sqrt_start_with(f, a, b, Tolerance::default())
}

pub fn integrate_sqrt_start_with<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    tol: Tolerance,
) -> Result<Quadrature, QuadratureError> {
    if b < a {
        return Err(QuadratureError::InvalidInterval(a, b));
    }
    integrate_with(|u| 2.0 * u * f(a + u * u), 0.0, (b - a).sqrt(), tol)
}
