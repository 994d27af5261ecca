//! Composition and compositional reversion.

use num_traits::{One, Zero};

use super::{div_trunc, mul_trunc, Series, SeriesError};
use crate::exact::{self, Rational};

impl Series {
    /// `self(g(z))`. The inner series must vanish at zero; the result has
    /// order `min(self.order(), g.order())`.
    pub fn compose(&self, g: &Series) -> Result<Series, SeriesError> {
        if !g.constant_term().is_zero() {
            return Err(SeriesError::NonzeroConstantTerm);
        }
        let len = self.order().min(g.order()) + 1;
        Ok(Series::new(compose_trunc(self.coeffs(), g.coeffs(), len)))
    }

    /// Compositional inverse `g` with `self(g(z)) = z = g(self(z))`, to the
    /// order of `self`.
    ///
    /// Newton iteration `g <- g - (f(g) - z) / f'(g)` doubles the number of
    /// correct coefficients each step, starting from `g = z / a_1`.
    pub fn revert(&self) -> Result<Series, SeriesError> {
        let order = self.order();
        if order < 1 || !self.coeffs()[0].is_zero() || self.coeffs()[1].is_zero() {
            return Err(SeriesError::NotInvertible);
        }
        let f = self.coeffs();
        let df: Vec<Rational> = (1..=order).map(|n| &f[n] * exact::int(n as i64)).collect();

        let mut g = vec![Rational::zero(), f[1].recip()];
        let mut known = 1;
        while known < order {
            let target = (2 * known + 1).min(order);
            let len = target + 1;
            g.resize(len, Rational::zero());
            let mut residual = compose_trunc(f, &g, len);
            residual[1] -= Rational::one();
            let slope = compose_trunc(&df, &g, len);
            let step = div_trunc(&residual, &slope, len);
            for (gi, si) in g.iter_mut().zip(step) {
                *gi -= si;
            }
            known = target;
        }
        g.truncate(order + 1);
        Ok(Series::new(g))
    }
}

pub fn compose(f: &Series, g: &Series) -> Result<Series, SeriesError> {
    f.compose(g)
}

pub fn revert(f: &Series) -> Result<Series, SeriesError> {
    f.revert()
}

/// Horner composition on raw coefficient slices, `len` output terms.
pub(crate) fn compose_trunc(f: &[Rational], g: &[Rational], len: usize) -> Vec<Rational> {
    let top = f.len().min(len);
    let mut acc = vec![Rational::zero(); len];
    for a in f[..top].iter().rev() {
        acc = mul_trunc(&acc, g, len);
        acc[0] += a;
    }
    acc
}
