//! Real-argument special functions.

pub mod bernoulli;
pub mod bessel;
pub mod central;
pub mod constants;
pub mod elliptic;
pub mod expint;
pub mod gamma;
pub mod incomplete;
pub mod precise;
pub mod zeta;

use thiserror::Error;

pub use bernoulli::{bernoulli_euler, BernoulliKind, BernoulliTable};
pub use bessel::{bessel, BesselKind};
pub use central::{central_binomial, CentralBinomialKind};
pub use constants::euler_gamma;
pub use elliptic::{elliptic, EllipticKind};
pub use expint::{exp_integral, ExpIntKind};
pub use gamma::{binom, gamma, ln_gamma, pochhammer};
pub use incomplete::{erf, gamma_star, upper_gamma};
pub use zeta::{polylog, zeta};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpecialError {
    #[error("pole at non-positive integer {0}")]
    PoleAtNonpositiveInteger(f64),
    #[error("{function}: {reason}")]
    DomainError { function: &'static str, reason: String },
    #[error("pole at s = 1")]
    PoleAtOne,
}
